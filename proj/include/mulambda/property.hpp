#ifndef MULAMBDA_PROPERTY_HPP
#define MULAMBDA_PROPERTY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"
#include "lattice.hpp"
#include "moebius.hpp"
#include "zoo.hpp"

namespace mulambda {

// lattice, class poset and Moebius data for one group, computed once
struct GroupAnalysis {
  SubgroupLattice lat;
  ClassPoset cp;
  MoebiusTable tab;
  std::uint32_t derived_id = 0;
  bool solvable = false;
};

inline GroupAnalysis analyze_group(const Group &g, const LatticeOptions &opt = {}) {
  GroupAnalysis a;
  a.lat = enumerate_subgroups(g, opt);
  a.cp = conjugacy_classes(a.lat);
  a.tab = moebius_table(a.lat, a.cp);
  Group derived = g.derived_subgroup(opt.element_cap);
  auto id = a.lat.find_by_elements(derived.elements());
  if (!id) throw std::logic_error("derived subgroup not found in lattice");
  a.derived_id = *id;
  a.solvable = g.is_solvable(opt.element_cap);
  return a;
}

struct ClassVerdict {
  std::uint32_t class_id = 0;
  std::uint64_t rep_order = 0, class_size = 0;
  std::int64_t mu = 0, lambda = 0;
  std::uint64_t norm_in_derived = 0; // |N_{G'}(H)|
  std::uint64_t derived_cap = 0;     // |G' cap H|
  std::int64_t t = 0;                // [N_{G'}(H) : G' cap H]
  std::int64_t mu_predicted = 0;     // t * lambda
  bool maxint = false;
  bool pass = true;
};

struct PropertyReport {
  std::string spec;
  std::uint64_t order = 0;
  bool solvable = false;
  std::uint64_t derived_order = 0, frattini_order = 0;
  std::size_t subgroup_count = 0, class_count = 0;
  std::vector<ClassVerdict> classes; // sorted by (rep order, class size)
  bool verdict = true;
  std::vector<std::uint32_t> failing_classes;
};

// evaluates mu(H) = [N_{G'}(H) : G' cap H] * lambda(H) at one representative
// per conjugacy class (all three quantities are class invariants)
inline PropertyReport check_property(const GroupAnalysis &a, bool maxint_only = false) {
  const SubgroupLattice &lat = a.lat;
  PropertyReport rep;
  rep.order = lat.ambient.order();
  rep.solvable = a.solvable;
  rep.derived_order = lat.subs[a.derived_id].order();
  rep.frattini_order = lat.subs[lat.frattini_id].order();
  rep.subgroup_count = lat.size();
  rep.class_count = lat.classes.size();
  const auto &der_bits = lat.subs[a.derived_id].bits;
  for (std::uint32_t c = 0; c < lat.classes.size(); ++c) {
    const SubgroupClass &cls = lat.classes[c];
    if (maxint_only && !lat.maxint[cls.rep]) continue;
    ClassVerdict v;
    v.class_id = c;
    v.rep_order = lat.subs[cls.rep].order();
    v.class_size = cls.size();
    v.mu = a.tab.mu[cls.rep];
    v.lambda = a.tab.lambda[c];
    v.maxint = lat.maxint[cls.rep];
    std::uint64_t nd = 0, dc = 0;
    const auto &nb = lat.subs[cls.normalizer].bits;
    const auto &hb = lat.subs[cls.rep].bits;
    for (std::size_t w = 0; w < der_bits.size(); ++w) {
      nd += std::popcount(nb[w] & der_bits[w]);
      dc += std::popcount(hb[w] & der_bits[w]);
    }
    v.norm_in_derived = nd;
    v.derived_cap = dc;
    v.t = static_cast<std::int64_t>(exact_div(static_cast<std::int64_t>(nd),
                                              static_cast<std::int64_t>(dc)));
    v.mu_predicted = chk_mul(v.t, v.lambda);
    v.pass = v.mu == v.mu_predicted;
    if (!v.pass) {
      rep.verdict = false;
      rep.failing_classes.push_back(c);
    }
    rep.classes.push_back(v);
  }
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const ClassVerdict &x, const ClassVerdict &y) {
              if (x.rep_order != y.rep_order) return x.rep_order < y.rep_order;
              if (x.class_size != y.class_size) return x.class_size < y.class_size;
              return x.class_id < y.class_id;
            });
  return rep;
}

inline Group direct_product(const Group &a, const Group &b,
                            std::size_t element_cap = k_default_element_cap) {
  return zoo_detail::build_product(a, b, element_cap);
}

struct ProductCheck {
  enum class Verdict { ok, not_applicable, fail };
  Verdict verdict = Verdict::ok;
  std::vector<std::uint64_t> nonsplit_maximal_orders;
  std::size_t split_subgroups_checked = 0;
  bool factors_pass = false;
  bool product_passes = false;
  std::string detail;
};

// direct-product splitting of mu and lambda: checks the hypothesis (every
// maximal subgroup of G1 x G2 splits), then the product rule on every split
// subgroup, then that the product inherits the property from the factors
inline ProductCheck product_split_check(const Group &g1, const Group &g2,
                                        const LatticeOptions &opt = {}) {
  ProductCheck out;
  Group p = direct_product(g1, g2, opt.element_cap);
  GroupAnalysis ap = analyze_group(p, opt);
  GroupAnalysis a1 = analyze_group(g1, opt);
  GroupAnalysis a2 = analyze_group(g2, opt);

  const std::uint32_t n = static_cast<std::uint32_t>(p.order());
  const std::uint32_t words = (n + 63) / 64;
  std::vector<std::uint64_t> b1(words, 0), b2(words, 0);
  const std::size_t d1 = g1.degree();
  const std::size_t dp = p.degree();
  for (std::uint32_t r = 0; r < n; ++r) {
    const Perm &e = p.element(r);
    bool fix2 = true, fix1 = true;
    for (std::size_t x = d1; x < dp; ++x)
      if (e(static_cast<point>(x)) != x) { fix2 = false; break; }
    for (std::size_t x = 0; x < d1; ++x)
      if (e(static_cast<point>(x)) != x) { fix1 = false; break; }
    if (fix2) detail::bit_set(b1, r);
    if (fix1) detail::bit_set(b2, r);
  }

  auto split_orders = [&](const Subgroup &s) {
    std::uint64_t c1 = 0, c2 = 0;
    for (std::uint32_t w = 0; w < words; ++w) {
      c1 += std::popcount(s.bits[w] & b1[w]);
      c2 += std::popcount(s.bits[w] & b2[w]);
    }
    return std::make_pair(c1, c2);
  };

  for (std::uint32_t i = 0; i < ap.lat.size(); ++i) {
    if (!ap.lat.maximal[i]) continue;
    auto [c1, c2] = split_orders(ap.lat.subs[i]);
    if (ap.lat.subs[i].order() != c1 * c2)
      out.nonsplit_maximal_orders.push_back(ap.lat.subs[i].order());
  }
  if (!out.nonsplit_maximal_orders.empty()) {
    out.verdict = ProductCheck::Verdict::not_applicable;
    out.detail = "a maximal subgroup does not split";
    return out;
  }

  // factor a split subgroup: restrict H cap (G1 x 1) to the first block,
  // H cap (1 x G2) to the second
  auto project = [&](const Subgroup &s, bool first) -> std::vector<Perm> {
    std::vector<Perm> res;
    const auto &mask = first ? b1 : b2;
    for (std::uint32_t r : s.ranks) {
      if (!detail::bit_get(mask, r)) continue;
      const Perm &e = p.element(r);
      std::vector<point> img;
      if (first) {
        img.assign(e.images().begin(), e.images().begin() + d1);
      } else {
        img.resize(dp - d1);
        for (std::size_t x = d1; x < dp; ++x)
          img[x - d1] = static_cast<point>(e(static_cast<point>(x)) - d1);
      }
      res.push_back(Perm(std::move(img)));
    }
    std::sort(res.begin(), res.end());
    return res;
  };

  for (std::uint32_t i = 0; i < ap.lat.size(); ++i) {
    const Subgroup &s = ap.lat.subs[i];
    auto [c1, c2] = split_orders(s);
    if (s.order() != c1 * c2) continue; // not a split subgroup
    auto id1 = a1.lat.find_by_elements(project(s, true));
    auto id2 = a2.lat.find_by_elements(project(s, false));
    if (!id1 || !id2) throw std::logic_error("split factor not found in factor lattice");
    ++out.split_subgroups_checked;
    std::int64_t want_mu = chk_mul(a1.tab.mu[*id1], a2.tab.mu[*id2]);
    std::int64_t want_lam = chk_mul(a1.tab.lambda[a1.lat.class_of[*id1]],
                                    a2.tab.lambda[a2.lat.class_of[*id2]]);
    if (ap.tab.mu[i] != want_mu ||
        ap.tab.lambda[ap.lat.class_of[i]] != want_lam) {
      out.verdict = ProductCheck::Verdict::fail;
      out.detail = "product rule violated at a split subgroup of order " +
                   std::to_string(s.order());
      return out;
    }
  }

  out.factors_pass = check_property(a1).verdict && check_property(a2).verdict;
  out.product_passes = check_property(ap).verdict;
  if (out.factors_pass && !out.product_passes) {
    out.verdict = ProductCheck::Verdict::fail;
    out.detail = "factors satisfy the property but the product does not";
  }
  return out;
}

struct FrattiniCheck {
  std::uint64_t frattini_order = 0;
  std::uint64_t quotient_order = 0;
  std::size_t subgroups_checked = 0;
  bool ok = true;
  std::string detail;
};

// for every H >= Phi(G): mu, lambda and [N_{G'}(H) : G' cap H] agree with the
// corresponding values for H/Phi inside G/Phi
inline FrattiniCheck frattini_quotient_check(const Group &g, const LatticeOptions &opt = {}) {
  FrattiniCheck out;
  GroupAnalysis a = analyze_group(g, opt);
  const SubgroupLattice &lat = a.lat;
  const Subgroup &phi = lat.subs[lat.frattini_id];
  out.frattini_order = phi.order();
  if (phi.order() == 1) {
    out.quotient_order = g.order();
    out.detail = "Frattini subgroup trivial; quotient check is the identity";
    std::uint32_t cnt = 0;
    for (std::uint32_t w = 0; w < lat.over[lat.frattini_id].size(); ++w)
      cnt += static_cast<std::uint32_t>(std::popcount(lat.over[lat.frattini_id][w]));
    out.subgroups_checked = cnt;
    return out;
  }

  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  // right cosets Phi*x, named by their smallest element rank
  std::vector<std::uint32_t> coset_of(n);
  {
    std::vector<Perm> phi_elems;
    for (std::uint32_t r : phi.ranks) phi_elems.push_back(g.element(r));
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t best = n;
      for (const Perm &f : phi_elems)
        best = std::min(best, g.rank_of(compose(f, g.element(x))));
      coset_of[x] = best;
    }
  }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x)
    if (coset_of[x] == x) reps.push_back(x);
  std::vector<std::uint32_t> coset_index(n, 0);
  for (std::uint32_t i = 0; i < reps.size(); ++i) coset_index[reps[i]] = i;

  auto induced = [&](const Perm &h) {
    std::vector<point> img(reps.size());
    for (std::uint32_t i = 0; i < reps.size(); ++i)
      img[i] = static_cast<point>(
          coset_index[coset_of[g.rank_of(compose(g.element(reps[i]), h))]]);
    return Perm(std::move(img));
  };

  std::vector<Perm> qgens;
  for (const Perm &x : g.generators()) qgens.push_back(induced(x));
  Group q = Group::close(qgens, opt.element_cap);
  out.quotient_order = q.order();
  if (q.order() * phi.order() != g.order())
    throw std::logic_error("coset action has wrong image order");
  GroupAnalysis aq = analyze_group(q, opt);

  auto t_of = [](const GroupAnalysis &an, std::uint32_t sub_id) {
    const SubgroupLattice &L = an.lat;
    const auto &der = L.subs[an.derived_id].bits;
    const SubgroupClass &cls = L.classes[L.class_of[sub_id]];
    std::uint64_t nd = 0, dc = 0;
    for (std::size_t w = 0; w < der.size(); ++w) {
      nd += std::popcount(L.subs[cls.normalizer].bits[w] & der[w]);
      dc += std::popcount(L.subs[cls.rep].bits[w] & der[w]);
    }
    return exact_div(static_cast<std::int64_t>(nd), static_cast<std::int64_t>(dc));
  };

  const auto &up = lat.over[lat.frattini_id];
  for (std::uint32_t w = 0; w < up.size(); ++w) {
    std::uint64_t bits = up[w];
    while (bits) {
      std::uint32_t h = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      // image of H in the quotient
      std::vector<Perm> himg;
      for (std::uint32_t r : lat.subs[h].ranks) himg.push_back(induced(g.element(r)));
      std::sort(himg.begin(), himg.end());
      himg.erase(std::unique(himg.begin(), himg.end()), himg.end());
      auto hq = aq.lat.find_by_elements(himg);
      if (!hq) throw std::logic_error("image subgroup not found in quotient lattice");
      ++out.subgroups_checked;
      bool same = a.tab.mu[h] == aq.tab.mu[*hq] &&
                  a.tab.lambda[lat.class_of[h]] == aq.tab.lambda[aq.lat.class_of[*hq]] &&
                  t_of(a, h) == t_of(aq, *hq);
      if (!same) {
        out.ok = false;
        out.detail = "mismatch at subgroup of order " +
                     std::to_string(lat.subs[h].order());
        return out;
      }
    }
  }
  return out;
}

namespace detail {

// exact isomorphism test for small posets given by their reachability bits
inline bool posets_isomorphic(std::size_t k,
                              const std::vector<std::vector<bool>> &la,
                              const std::vector<std::vector<bool>> &lb) {
  std::vector<std::pair<int, int>> siga(k), sigb(k);
  for (std::size_t i = 0; i < k; ++i) {
    int up = 0, down = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (la[i][j]) ++up;
      if (la[j][i]) ++down;
    }
    siga[i] = {up, down};
    up = down = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (lb[i][j]) ++up;
      if (lb[j][i]) ++down;
    }
    sigb[i] = {up, down};
  }
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(k, -1);
  std::vector<bool> used(k, false);
  // backtracking over signature-compatible assignments
  auto rec = [&](auto &&self, std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j] || siga[i] != sigb[j]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < i && ok; ++t) {
        if (la[i][t] != lb[j][static_cast<std::size_t>(map[t])]) ok = false;
        if (ok && la[t][i] != lb[static_cast<std::size_t>(map[t])][j]) ok = false;
      }
      if (!ok) continue;
      used[j] = true;
      map[i] = static_cast<int>(j);
      if (self(self, i + 1)) return true;
      used[j] = false;
      map[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

} // namespace detail

struct OvergroupDiagnostic {
  std::size_t s_size = 0;    // overgroups of H in the subgroup lattice
  std::size_t sbar_size = 0; // classes above [H] in the class poset
  bool isomorphic = false;
};

// compares the poset of overgroups of H with the poset of classes above [H]
inline OvergroupDiagnostic overgroup_poset_diagnostic(const GroupAnalysis &a,
                                                      std::uint32_t sub_id) {
  const SubgroupLattice &lat = a.lat;
  OvergroupDiagnostic d;
  std::vector<std::uint32_t> s_ids;
  const auto &row = lat.over[sub_id];
  for (std::uint32_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      s_ids.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  std::vector<std::uint32_t> c_ids;
  std::uint32_t hc = lat.class_of[sub_id];
  for (std::uint32_t c = 0; c < a.cp.count; ++c)
    if (a.cp.leq(hc, c)) c_ids.push_back(c);
  d.s_size = s_ids.size();
  d.sbar_size = c_ids.size();
  if (d.s_size != d.sbar_size) { d.isomorphic = false; return d; }
  std::size_t k = d.s_size;
  std::vector<std::vector<bool>> la(k, std::vector<bool>(k)), lb(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      la[i][j] = lat.leq(s_ids[i], s_ids[j]);
      lb[i][j] = a.cp.leq(c_ids[i], c_ids[j]);
    }
  d.isomorphic = detail::posets_isomorphic(k, la, lb);
  return d;
}

} // namespace mulambda

#endif
