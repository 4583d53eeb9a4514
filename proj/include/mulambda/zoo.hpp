#ifndef MULAMBDA_ZOO_HPP
#define MULAMBDA_ZOO_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"
#include "group.hpp"
#include "group_spec.hpp"
#include "intmath.hpp"
#include "perm.hpp"

namespace mulambda {

struct build_error : std::runtime_error {
  explicit build_error(const std::string &what) : std::runtime_error(what) {}
};

inline std::int64_t psl2_order(std::int64_t q) {
  return chk_mul(q, chk_mul(q - 1, q + 1)) / (q % 2 == 0 ? 1 : 2);
}
inline std::int64_t pgl2_order(std::int64_t q) {
  return chk_mul(q, chk_mul(q - 1, q + 1));
}
inline std::int64_t sz_order(std::int64_t q) {
  return chk_mul(chk_mul(q, q), chk_mul(chk_mul(q, q) + 1, q - 1));
}

namespace zoo_detail {

// Sz(8) acting on the 65 points of the Suzuki-Tits ovoid in PG(3,8);
// unverified data, validated at load by order and simplicity checks.
inline const std::vector<std::vector<point>> &sz8_generators() {
  static const std::vector<std::vector<point>> gens = {
      {0,  10, 9,  12, 11, 14, 13, 16, 15, 1,  2,  3,  4,  5,  6,  7,  8,
       28, 27, 26, 25, 32, 31, 30, 29, 19, 20, 17, 18, 23, 24, 21, 22, 46,
       45, 48, 47, 42, 41, 44, 43, 37, 38, 39, 40, 33, 34, 35, 36, 64, 63,
       62, 61, 60, 59, 58, 57, 55, 56, 53, 54, 51, 52, 49, 50},
      {1,  24, 8,  62, 30, 34, 58, 29, 37, 0,  17, 57, 41, 33, 49, 25, 9,
       38, 63, 46, 7,  43, 40, 11, 16, 51, 39, 2,  53, 21, 10, 23, 35, 26,
       36, 47, 48, 50, 4,  55, 32, 15, 28, 20, 31, 5,  14, 22, 45, 61, 27,
       12, 64, 52, 56, 13, 3,  44, 59, 18, 54, 19, 60, 6,  42}};
  return gens;
}

// U3(3) acting on the 28 isotropic points of the Hermitian unital in PG(2,9);
// unverified data, validated at load by an order check.
inline const std::vector<std::vector<point>> &u33_generators() {
  static const std::vector<std::vector<point>> gens = {
      {24, 6, 25, 7, 13, 8,  2,  4,  3,  20, 9,  19, 16, 23,
       22, 0, 26, 1, 10, 18, 27, 15, 17, 5,  12, 14, 21, 11},
      {4,  7,  10, 19, 0,  6,  5,  1, 27, 17, 2,  14, 12, 16,
       11, 23, 13, 9,  18, 3,  20, 24, 25, 15, 21, 22, 26, 8}};
  return gens;
}

inline Group check_order(Group g, std::int64_t expected, const std::string &what) {
  if (static_cast<std::int64_t>(g.order()) != expected)
    throw build_error(what + ": built group has order " + std::to_string(g.order()) +
                      ", expected " + std::to_string(expected));
  return g;
}

// simple <=> the normal closure of every nontrivial element is the whole
// group; one representative per conjugacy class of elements suffices.
// Works in rank space over the element table.
inline bool is_simple(const Group &g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  if (n == 1) return false;
  std::unordered_map<Perm, std::uint32_t, detail::perm_hash> rank;
  rank.reserve(n * 2);
  for (std::uint32_t i = 0; i < n; ++i) rank.emplace(g.element(i), i);
  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    return rank.at(compose(g.element(a), g.element(b)));
  };
  const std::uint32_t id = rank.at(Perm::identity(g.degree()));
  std::vector<std::vector<std::uint32_t>> conj;
  for (const Perm &p : g.generators()) {
    if (p.is_identity()) continue;
    std::uint32_t gr = rank.at(p);
    std::uint32_t gi = rank.at(p.inverse());
    std::vector<std::uint32_t> t(n);
    for (std::uint32_t x = 0; x < n; ++x) t[x] = mul(mul(gi, x), gr);
    conj.push_back(std::move(t));
  }
  std::vector<std::uint32_t> stamp(n, 0), queue(n);
  std::uint32_t epoch = 0;
  auto close_gens = [&](const std::vector<std::uint32_t> &gens) {
    ++epoch;
    std::uint32_t tail = 0, head = 0;
    stamp[id] = epoch;
    queue[tail++] = id;
    while (head < tail) {
      std::uint32_t x = queue[head++];
      for (std::uint32_t gr : gens) {
        std::uint32_t y = mul(gr, x);
        if (stamp[y] != epoch) { stamp[y] = epoch; queue[tail++] = y; }
      }
    }
    return tail;
  };
  std::vector<bool> seen(n, false);
  seen[id] = true;
  for (std::uint32_t r0 = 0; r0 < n; ++r0) {
    if (seen[r0]) continue;
    std::vector<std::uint32_t> orbit{r0};
    seen[r0] = true;
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (const auto &ct : conj) {
        std::uint32_t c = ct[orbit[h]];
        if (!seen[c]) { seen[c] = true; orbit.push_back(c); }
      }
    std::vector<std::uint32_t> nc{r0};
    for (;;) {
      std::uint32_t size = close_gens(nc);
      bool grew = false;
      std::size_t cur = nc.size();
      for (std::size_t i = 0; i < cur; ++i)
        for (const auto &ct : conj) {
          std::uint32_t c = ct[nc[i]];
          if (stamp[c] != epoch) { nc.push_back(c); grew = true; }
        }
      if (!grew) {
        if (size != n) return false;
        break;
      }
    }
  }
  return true;
}

inline Group build_cyclic(long long n, std::size_t cap) {
  if (n < 1) throw build_error("cyclic: order must be >= 1");
  if (n == 1) return Group::trivial(1);
  std::vector<point> img(n);
  for (long long i = 0; i < n; ++i) img[i] = static_cast<point>((i + 1) % n);
  return check_order(Group::close({Perm(std::move(img))}, cap), n, "cyclic");
}

inline Group build_dihedral(long long m, std::size_t cap) {
  if (m < 2 || m % 2 != 0) throw build_error("dihedral: order must be even and >= 2");
  long long n = m / 2;
  if (n == 1) return check_order(Group::close({Perm::from_cycles("(0 1)")}, cap), 2, "dihedral");
  if (n == 2)
    return check_order(Group::close({Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(2 3)", 4)}, cap),
                       4, "dihedral");
  std::vector<point> rot(n);
  for (long long i = 0; i < n; ++i) rot[i] = static_cast<point>((i + 1) % n);
  std::vector<point> ref(n);
  for (long long i = 0; i < n; ++i) ref[i] = static_cast<point>((n - i) % n);
  return check_order(Group::close({Perm(std::move(rot)), Perm(std::move(ref))}, cap), m,
                     "dihedral");
}

inline Group build_sym(long long n, std::size_t cap) {
  if (n < 1) throw build_error("sym: degree must be >= 1");
  if (n == 1) return Group::trivial(1);
  std::int64_t ord = 1;
  for (long long i = 2; i <= n; ++i) ord = chk_mul(ord, i);
  std::vector<Perm> gens{Perm::from_cycles("(0 1)", n)};
  if (n > 2) {
    std::vector<point> cyc(n);
    for (long long i = 0; i < n; ++i) cyc[i] = static_cast<point>((i + 1) % n);
    gens.push_back(Perm(std::move(cyc)));
  }
  return check_order(Group::close(std::move(gens), cap), ord, "sym");
}

inline Group build_alt(long long n, std::size_t cap) {
  if (n < 1) throw build_error("alt: degree must be >= 1");
  if (n <= 2) return Group::trivial(std::max<long long>(n, 1));
  std::int64_t ord = 1;
  for (long long i = 2; i <= n; ++i) ord = chk_mul(ord, i);
  ord /= 2;
  std::vector<Perm> gens{Perm::from_cycles("(0 1 2)", n)};
  if (n > 3) {
    std::vector<point> cyc(n);
    if (n % 2 == 1) {
      for (long long i = 0; i < n; ++i) cyc[i] = static_cast<point>((i + 1) % n);
    } else {
      cyc[0] = 0;
      for (long long i = 1; i < n; ++i) cyc[i] = static_cast<point>(i % (n - 1) + 1);
    }
    gens.push_back(Perm(std::move(cyc)));
  }
  return check_order(Group::close(std::move(gens), cap), ord, "alt");
}

inline Group build_elem(long long p, long long k, std::size_t cap) {
  if (!is_prime(p)) throw build_error("elem: p must be prime");
  if (k < 1) throw build_error("elem: k must be >= 1");
  std::int64_t ord = ipow(p, static_cast<int>(k));
  std::vector<Perm> gens;
  std::size_t deg = static_cast<std::size_t>(p * k);
  for (long long j = 0; j < k; ++j) {
    std::vector<point> img(deg);
    for (std::size_t i = 0; i < deg; ++i) img[i] = static_cast<point>(i);
    for (long long i = 0; i < p; ++i)
      img[j * p + i] = static_cast<point>(j * p + (i + 1) % p);
    gens.push_back(Perm(std::move(img)));
  }
  return check_order(Group::close(std::move(gens), cap), ord, "elem");
}

// natural action of PGL2(q) / PSL2(q) on the projective line:
// points 0..q-1 are the field elements, point q is infinity
inline Group build_l2(std::int64_t q, bool projective_general, std::size_t cap) {
  auto pe = prime_power(q);
  if (!pe) throw build_error("psl2/pgl2: q must be a prime power");
  if (q < 2) throw build_error("psl2/pgl2: q must be >= 2");
  FiniteField F(q);
  const int inf = static_cast<int>(q);
  auto moebius_map = [&](int a, int b, int c, int d) {
    // x -> (a x + b) / (c x + d)
    std::vector<point> img(q + 1);
    for (int x = 0; x < q; ++x) {
      int num = F.add(F.mul(a, x), b);
      int den = F.add(F.mul(c, x), d);
      img[x] = den == 0 ? static_cast<point>(inf)
                        : static_cast<point>(F.mul(num, F.inv(den)));
    }
    img[inf] = c == 0 ? static_cast<point>(inf) : static_cast<point>(F.mul(a, F.inv(c)));
    return Perm(std::move(img));
  };
  int w = F.primitive_element();
  std::vector<Perm> gens;
  gens.push_back(moebius_map(1, 1, 0, 1)); // x + 1
  std::int64_t expected;
  if (q % 2 == 0 || projective_general) {
    gens.push_back(moebius_map(w, 0, 0, 1)); // w x
    gens.push_back(moebius_map(0, 1, 1, 0)); // 1/x
    expected = pgl2_order(q);
  } else {
    gens.push_back(moebius_map(F.mul(w, w), 0, 0, 1)); // w^2 x
    gens.push_back(moebius_map(0, F.neg(1), 1, 0));    // -1/x
    expected = psl2_order(q);
  }
  return check_order(Group::close(std::move(gens), cap),
                     projective_general ? pgl2_order(q) : expected,
                     projective_general ? "pgl2" : "psl2");
}

inline Group build_product(const Group &a, const Group &b, std::size_t cap) {
  std::size_t deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm &g : a.generators()) gens.push_back(g.extended(deg));
  for (const Perm &g : b.generators()) gens.push_back(g.shifted(a.degree()));
  if (gens.empty()) return Group::trivial(deg);
  return check_order(Group::close(std::move(gens), cap),
                     chk_mul(static_cast<std::int64_t>(a.order()),
                             static_cast<std::int64_t>(b.order())),
                     "product");
}

} // namespace zoo_detail

inline Group build_group(const GroupSpec &spec,
                         std::size_t element_cap = k_default_element_cap) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic: return zoo_detail::build_cyclic(spec.params[0], element_cap);
    case K::dihedral: return zoo_detail::build_dihedral(spec.params[0], element_cap);
    case K::sym: return zoo_detail::build_sym(spec.params[0], element_cap);
    case K::alt: return zoo_detail::build_alt(spec.params[0], element_cap);
    case K::elem: return zoo_detail::build_elem(spec.params[0], spec.params[1], element_cap);
    case K::psl2: return zoo_detail::build_l2(spec.params[0], false, element_cap);
    case K::pgl2: return zoo_detail::build_l2(spec.params[0], true, element_cap);
    case K::sz: {
      if (spec.params[0] != 8) throw build_error("sz: only q = 8 is available");
      std::vector<Perm> gens;
      for (const auto &v : zoo_detail::sz8_generators()) gens.push_back(Perm(v));
      Group g = zoo_detail::check_order(Group::close(std::move(gens), element_cap),
                                        sz_order(8), "sz");
      if (!zoo_detail::is_simple(g))
        throw build_error("sz: loaded group is not simple");
      return g;
    }
    case K::u3: {
      if (spec.params[0] != 3) throw build_error("u3: only q = 3 is available");
      std::vector<Perm> gens;
      for (const auto &v : zoo_detail::u33_generators()) gens.push_back(Perm(v));
      return zoo_detail::check_order(Group::close(std::move(gens), element_cap), 6048, "u3");
    }
    case K::product: {
      Group a = build_group(*spec.factors[0], element_cap);
      Group b = build_group(*spec.factors[1], element_cap);
      return zoo_detail::build_product(a, b, element_cap);
    }
    case K::perm: {
      std::vector<Perm> gens;
      std::size_t deg = 0;
      for (const std::string &c : spec.cycle_gens)
        deg = std::max(deg, Perm::from_cycles(c).degree());
      for (const std::string &c : spec.cycle_gens)
        gens.push_back(Perm::from_cycles(c, deg));
      return Group::close(std::move(gens), element_cap);
    }
  }
  throw build_error("unreachable");
}

inline Group build_group(const std::string &text,
                         std::size_t element_cap = k_default_element_cap) {
  return build_group(parse_spec(text), element_cap);
}

} // namespace mulambda

#endif
