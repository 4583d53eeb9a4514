#ifndef MULAMBDA_LATTICE_HPP
#define MULAMBDA_LATTICE_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <thread>
#include <unistd.h>
#include <unordered_map>
#include <vector>

#include "group.hpp"
#include "intmath.hpp"

namespace mulambda {

struct LatticeOptions {
  std::size_t element_cap = k_default_element_cap;
  std::size_t subgroup_cap = 200000;
  unsigned threads = 1;               // 0 = hardware concurrency
  std::size_t mult_table_budget = 0;  // bytes; 0 = a third of physical memory
};

namespace detail {

inline std::size_t resolve_table_budget(std::size_t requested) {
  if (requested) return requested;
  long pages = ::sysconf(_SC_PHYS_PAGES);
  long psize = ::sysconf(_SC_PAGE_SIZE);
  if (pages > 0 && psize > 0)
    return static_cast<std::size_t>(pages) / 3 * static_cast<std::size_t>(psize);
  return std::size_t(256) << 20;
}

inline void bit_set(std::vector<std::uint64_t> &w, std::uint32_t i) {
  w[i >> 6] |= std::uint64_t(1) << (i & 63);
}
inline bool bit_get(const std::vector<std::uint64_t> &w, std::uint32_t i) {
  return (w[i >> 6] >> (i & 63)) & 1;
}
inline bool bits_subset(const std::vector<std::uint64_t> &a,
                        const std::vector<std::uint64_t> &b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}
inline std::size_t bits_count(const std::vector<std::uint64_t> &a) {
  std::size_t c = 0;
  for (std::uint64_t w : a) c += std::popcount(w);
  return c;
}

// Rank arithmetic over the ambient group's sorted element table.  For groups
// that fit the budget a full left-multiplication table is built via the Cayley
// graph, making products a single array read; otherwise products go through
// permutation composition plus a hash lookup.
class RankEngine {
public:
  RankEngine(const Group &g, std::size_t table_budget)
      : g_(&g), n_(static_cast<std::uint32_t>(g.order())) {
    table_budget = resolve_table_budget(table_budget);
    rank_.reserve(n_ * 2);
    for (std::uint32_t i = 0; i < n_; ++i) rank_.emplace(g.element(i), i);
    id_ = lookup(Perm::identity(g.degree()));
    for (const Perm &p : g.generators()) {
      if (p.is_identity()) continue;
      std::uint32_t r = lookup(p);
      if (std::find(gens_.begin(), gens_.end(), r) == gens_.end()) gens_.push_back(r);
    }
    inv_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) inv_[i] = lookup(g.element(i).inverse());
    if (static_cast<std::uint64_t>(n_) * n_ * 2 <= table_budget && n_ < 65535)
      build_table();
    conj_.resize(gens_.size());
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      conj_[k].resize(n_);
      std::uint32_t gr = gens_[k], gi = inv_[gr];
      for (std::uint32_t x = 0; x < n_; ++x) conj_[k][x] = mul(mul(gi, x), gr);
    }
  }

  std::uint32_t size() const { return n_; }
  std::uint32_t identity() const { return id_; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  const std::vector<std::uint32_t> &gen_ranks() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  const std::vector<std::uint32_t> &conj_table(std::size_t k) const { return conj_[k]; }
  bool has_table() const { return !table_.empty(); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[std::size_t(a) * n_ + b];
    return lookup(compose(g_->element(a), g_->element(b)));
  }

  const std::uint16_t *row(std::uint32_t a) const { return table_.data() + std::size_t(a) * n_; }

  std::uint32_t lookup(const Perm &p) const { return rank_.at(p); }

private:
  void build_table() {
    table_.assign(std::size_t(n_) * n_, 0);
    std::vector<bool> built(n_, false);
    // identity row is the identity map
    for (std::uint32_t b = 0; b < n_; ++b) table_[std::size_t(id_) * n_ + b] = static_cast<std::uint16_t>(b);
    built[id_] = true;
    // generator rows by direct lookup, the rest by row composition along the
    // Cayley graph: row(g*x) = row(g) o row(x)
    for (std::uint32_t gr : gens_) {
      if (built[gr]) continue;
      std::uint16_t *r = table_.data() + std::size_t(gr) * n_;
      for (std::uint32_t b = 0; b < n_; ++b)
        r[b] = static_cast<std::uint16_t>(lookup(compose(g_->element(gr), g_->element(b))));
      built[gr] = true;
    }
    std::vector<std::uint32_t> queue{id_};
    for (std::uint32_t gr : gens_)
      if (gr != id_) queue.push_back(gr);
    std::size_t head = 0;
    while (head < queue.size()) {
      std::uint32_t x = queue[head++];
      const std::uint16_t *rx = table_.data() + std::size_t(x) * n_;
      for (std::uint32_t gr : gens_) {
        const std::uint16_t *rg = table_.data() + std::size_t(gr) * n_;
        std::uint32_t y = rg[x];
        if (!built[y]) {
          std::uint16_t *ry = table_.data() + std::size_t(y) * n_;
          for (std::uint32_t b = 0; b < n_; ++b) ry[b] = rg[rx[b]];
          built[y] = true;
          queue.push_back(y);
        }
      }
    }
    for (std::uint32_t i = 0; i < n_; ++i)
      if (!built[i]) throw std::logic_error("multiplication table build incomplete");
  }

  const Group *g_;
  std::uint32_t n_, id_ = 0;
  std::vector<std::uint32_t> gens_, inv_;
  std::vector<std::uint16_t> table_;
  std::vector<std::vector<std::uint32_t>> conj_;
  std::unordered_map<Perm, std::uint32_t, perm_hash> rank_;
};

struct ClosureScratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> queue;

  void init(std::uint32_t n) {
    stamp.assign(n, 0);
    queue.resize(n);
    epoch = 0;
  }
};

// closure of seed_ranks under left multiplication by gens; returns the number
// of elements, or 0 if it exceeded `threshold` (meaning: the whole group)
inline std::uint32_t rank_closure(const RankEngine &E,
                                  const std::uint32_t *seeds, std::size_t n_seeds,
                                  const std::uint32_t *gens, std::size_t n_gens,
                                  std::uint32_t threshold, ClosureScratch &ws,
                                  std::vector<std::uint32_t> *out_sorted) {
  ++ws.epoch;
  std::uint32_t count = 0, tail = 0;
  for (std::size_t i = 0; i < n_seeds; ++i) {
    std::uint32_t s = seeds[i];
    if (ws.stamp[s] != ws.epoch) {
      ws.stamp[s] = ws.epoch;
      ws.queue[tail++] = s;
      ++count;
    }
  }
  if (count > threshold) return 0;
  std::uint32_t head = 0;
  if (E.has_table()) {
    while (head < tail) {
      std::uint32_t x = ws.queue[head++];
      for (std::size_t k = 0; k < n_gens; ++k) {
        std::uint32_t y = E.row(gens[k])[x];
        if (ws.stamp[y] != ws.epoch) {
          ws.stamp[y] = ws.epoch;
          if (++count > threshold) return 0;
          ws.queue[tail++] = y;
        }
      }
    }
  } else {
    while (head < tail) {
      std::uint32_t x = ws.queue[head++];
      for (std::size_t k = 0; k < n_gens; ++k) {
        std::uint32_t y = E.mul(gens[k], x);
        if (ws.stamp[y] != ws.epoch) {
          ws.stamp[y] = ws.epoch;
          if (++count > threshold) return 0;
          ws.queue[tail++] = y;
        }
      }
    }
  }
  if (out_sorted) {
    out_sorted->assign(ws.queue.begin(), ws.queue.begin() + tail);
    std::sort(out_sorted->begin(), out_sorted->end());
  }
  return count;
}

// normal closure of <x> in rank space
inline std::uint32_t normal_closure_size(const RankEngine &E, std::uint32_t x,
                                         ClosureScratch &ws) {
  std::vector<std::uint32_t> ncgens{x};
  std::vector<std::uint32_t> elems;
  for (;;) {
    std::uint32_t id = E.identity();
    std::vector<std::uint32_t> seeds{id};
    rank_closure(E, seeds.data(), 1, ncgens.data(), ncgens.size(), E.size(), ws, &elems);
    bool grew = false;
    std::size_t cur = ncgens.size();
    for (std::size_t i = 0; i < cur; ++i)
      for (std::size_t k = 0; k < E.num_gens(); ++k) {
        std::uint32_t c = E.conj_table(k)[ncgens[i]];
        if (!std::binary_search(elems.begin(), elems.end(), c)) {
          ncgens.push_back(c);
          grew = true;
        }
      }
    if (!grew) return static_cast<std::uint32_t>(elems.size());
  }
}

inline bool ambient_is_simple(const RankEngine &E, ClosureScratch &ws) {
  std::uint32_t n = E.size();
  if (n == 1) return false;
  std::vector<bool> seen(n, false);
  seen[E.identity()] = true;
  for (std::uint32_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    std::vector<std::uint32_t> orbit{r};
    seen[r] = true;
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (std::size_t k = 0; k < E.num_gens(); ++k) {
        std::uint32_t c = E.conj_table(k)[orbit[h]];
        if (!seen[c]) { seen[c] = true; orbit.push_back(c); }
      }
    if (normal_closure_size(E, r, ws) != n) return false;
  }
  return true;
}

// any proper subgroup of a group of this order has order <= the returned bound
inline std::uint64_t proper_order_bound(std::uint64_t order, bool simple) {
  if (order <= 1) return 0;
  auto divs = divisors(static_cast<std::int64_t>(order));
  std::uint64_t largest_proper = static_cast<std::uint64_t>(divs[divs.size() - 2]);
  if (!simple) return largest_proper;
  // simple: a proper subgroup of index k embeds G in S_k, so order | k!
  auto fac = factorize(static_cast<std::int64_t>(order));
  auto legendre = [](std::int64_t k, std::int64_t p) {
    std::int64_t s = 0;
    for (std::int64_t q = p; q <= k; q *= p) {
      s += k / q;
      if (q > k / p) break;
    }
    return s;
  };
  std::int64_t k = 2;
  for (;; ++k) {
    bool ok = true;
    for (auto [p, a] : fac)
      if (legendre(k, p) < a) { ok = false; break; }
    if (ok) break;
  }
  std::uint64_t cap = order / static_cast<std::uint64_t>(k);
  std::uint64_t best = 1;
  for (std::int64_t d : divs)
    if (static_cast<std::uint64_t>(d) <= cap) best = static_cast<std::uint64_t>(d);
  return std::min(best, largest_proper);
}

} // namespace detail

struct Subgroup {
  std::vector<std::uint32_t> ranks; // sorted element ranks in the ambient table
  std::vector<std::uint32_t> gens;  // ranks of a generating set
  std::vector<std::uint64_t> bits;  // element bitset
  std::uint64_t order() const { return ranks.size(); }
};

struct SubgroupClass {
  std::uint32_t rep = 0;             // smallest subgroup id in the class
  std::vector<std::uint32_t> members;
  std::uint32_t normalizer = 0;      // subgroup id of N_G(rep)
  std::uint64_t size() const { return members.size(); }
};

class SubgroupLattice {
public:
  Group ambient;
  bool ambient_simple = false;
  std::vector<Subgroup> subs;
  // over[i] is a bitset over subgroup ids: bit j set iff subs[i] <= subs[j];
  // the full order, self included
  std::vector<std::vector<std::uint64_t>> over;
  std::vector<bool> maximal;  // coatoms
  std::vector<bool> maxint;   // G together with intersections of maximals
  std::uint32_t frattini_id = 0;
  std::uint32_t bottom_id = 0, top_id = 0;
  std::vector<std::uint32_t> class_of;
  std::vector<SubgroupClass> classes;

  std::size_t size() const { return subs.size(); }

  bool leq(std::uint32_t i, std::uint32_t j) const { return detail::bit_get(over[i], j); }

  std::optional<std::uint32_t> find_subgroup(const std::vector<std::uint32_t> &sorted_ranks) const {
    auto cmp = [](const Subgroup &s, const std::vector<std::uint32_t> &r) {
      if (s.ranks.size() != r.size()) return s.ranks.size() < r.size();
      return s.ranks < r;
    };
    auto it = std::lower_bound(subs.begin(), subs.end(), sorted_ranks, cmp);
    if (it == subs.end() || it->ranks != sorted_ranks) return std::nullopt;
    return static_cast<std::uint32_t>(it - subs.begin());
  }

  std::optional<std::uint32_t> find_by_elements(const std::vector<Perm> &elems) const {
    std::vector<std::uint32_t> ranks;
    ranks.reserve(elems.size());
    for (const Perm &p : elems) {
      if (!ambient.contains(p)) return std::nullopt;
      ranks.push_back(ambient.rank_of(p));
    }
    std::sort(ranks.begin(), ranks.end());
    return find_subgroup(ranks);
  }

  // materialize a subgroup as a standalone Group
  Group subgroup_group(std::uint32_t id) const {
    std::vector<Perm> elems;
    elems.reserve(subs[id].ranks.size());
    for (std::uint32_t r : subs[id].ranks) elems.push_back(ambient.element(r));
    return Group::from_sorted_elements(ambient.degree(), std::move(elems));
  }
};

// poset of conjugacy classes of subgroups; [i] <= [j] iff the representative
// of i is contained in some member of class j
struct ClassPoset {
  std::uint32_t count = 0;
  std::uint32_t words = 0;
  std::vector<std::uint64_t> leq_bits; // row-major count x words

  bool leq(std::uint32_t i, std::uint32_t j) const {
    return (leq_bits[std::size_t(i) * words + (j >> 6)] >> (j & 63)) & 1;
  }
};

inline ClassPoset conjugacy_classes(const SubgroupLattice &lat) {
  ClassPoset cp;
  cp.count = static_cast<std::uint32_t>(lat.classes.size());
  cp.words = (cp.count + 63) / 64;
  cp.leq_bits.assign(std::size_t(cp.count) * cp.words, 0);
  const std::uint32_t nsubs = static_cast<std::uint32_t>(lat.size());
  for (std::uint32_t ci = 0; ci < cp.count; ++ci) {
    const auto &over_rep = lat.over[lat.classes[ci].rep];
    // class cj is above ci iff any member of cj is an overgroup of rep(ci)
    for (std::uint32_t r = 0; r < nsubs; ++r) {
      if (!detail::bit_get(over_rep, r)) continue;
      std::uint32_t cj = lat.class_of[r];
      cp.leq_bits[std::size_t(ci) * cp.words + (cj >> 6)] |= std::uint64_t(1) << (cj & 63);
    }
  }
  // antisymmetry: mutual containment of classes forces equality
  for (std::uint32_t i = 0; i < cp.count; ++i)
    for (std::uint32_t j = i + 1; j < cp.count; ++j)
      if (cp.leq(i, j) && cp.leq(j, i))
        throw std::logic_error("class poset: antisymmetry violated");
  return cp;
}

namespace detail {

struct BuildSub {
  std::vector<std::uint32_t> ranks;
  std::vector<std::uint32_t> gens;
  std::vector<std::uint64_t> bits;
};

struct rankvec_hash {
  std::size_t operator()(const std::vector<std::uint32_t> &v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// shrink a generating set: prefer 1-2 generators, then 3, found by search
// over the current generators (result is verified to regenerate the order)
inline void reduce_gens(const RankEngine &E, BuildSub &s, std::uint32_t order,
                        ClosureScratch &ws) {
  if (s.gens.size() <= 2) return;
  std::uint32_t id = E.identity();
  std::vector<std::uint32_t> cand;
  for (std::size_t i = 0; i < s.gens.size(); ++i)
    for (std::size_t j = i + 1; j < s.gens.size(); ++j) {
      cand = {s.gens[i], s.gens[j]};
      if (rank_closure(E, &id, 1, cand.data(), 2, order, ws, nullptr) == order) {
        s.gens = cand;
        return;
      }
    }
  if (s.gens.size() <= 3) return;
  for (std::size_t i = 0; i < s.gens.size(); ++i)
    for (std::size_t j = i + 1; j < s.gens.size(); ++j)
      for (std::size_t k = j + 1; k < s.gens.size(); ++k) {
        cand = {s.gens[i], s.gens[j], s.gens[k]};
        if (rank_closure(E, &id, 1, cand.data(), 3, order, ws, nullptr) == order) {
          s.gens = cand;
          return;
        }
      }
}

} // namespace detail

inline SubgroupLattice enumerate_subgroups(const Group &g, const LatticeOptions &opt = {}) {
  using namespace detail;
  if (g.order() > opt.element_cap)
    throw cap_exceeded("enumerate_subgroups: group order exceeds element cap");
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  RankEngine E(g, opt.mult_table_budget);
  ClosureScratch ws;
  ws.init(n);

  const bool simple = ambient_is_simple(E, ws);
  const std::uint32_t threshold =
      n == 1 ? 1 : static_cast<std::uint32_t>(proper_order_bound(n, simple));
  const std::uint32_t words = (n + 63) / 64;

  std::vector<BuildSub> subs;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, rankvec_hash> index;
  auto insert = [&](std::vector<std::uint32_t> ranks,
                    std::vector<std::uint32_t> gens) -> std::pair<std::uint32_t, bool> {
    auto it = index.find(ranks);
    if (it != index.end()) return {it->second, false};
    if (subs.size() >= opt.subgroup_cap)
      throw cap_exceeded("enumerate_subgroups: subgroup cap " +
                         std::to_string(opt.subgroup_cap) + " exceeded");
    BuildSub s;
    s.bits.assign(words, 0);
    for (std::uint32_t r : ranks) bit_set(s.bits, r);
    s.ranks = std::move(ranks);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    s.gens = std::move(gens);
    std::uint32_t id = static_cast<std::uint32_t>(subs.size());
    if (s.ranks.size() > 1)
      reduce_gens(E, s, static_cast<std::uint32_t>(s.ranks.size()), ws);
    index.emplace(s.ranks, id);
    subs.push_back(std::move(s));
    return {id, true};
  };

  // the ambient group and the trivial subgroup
  {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    insert(std::move(all), E.gen_ranks());
    insert({E.identity()}, {});
  }

  // cyclic subgroups of every element; prime-power ones become join seeds
  struct Seed { std::uint32_t sub_id; std::uint32_t gen; };
  std::vector<Seed> seeds;
  std::vector<std::int64_t> seed_index_of(1, -1); // per subgroup id
  {
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (x == E.identity()) continue;
      cyc.clear();
      std::uint32_t y = E.identity();
      do {
        cyc.push_back(y);
        y = E.mul(x, y);
      } while (y != E.identity());
      std::sort(cyc.begin(), cyc.end());
      auto [id, fresh] = insert(cyc, {x});
      (void)fresh;
      if (seed_index_of.size() <= id) seed_index_of.resize(id + 1, -1);
      auto pe = prime_power(static_cast<std::int64_t>(cyc.size()));
      if (pe && seed_index_of[id] < 0) {
        seed_index_of[id] = static_cast<std::int64_t>(seeds.size());
        seeds.push_back({id, x});
      }
    }
  }

  // join closure: every subgroup is a join of prime-power cyclic subgroups,
  // so joining each discovered subgroup with every seed reaches a fixpoint
  // containing the full lattice
  unsigned n_threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  {
    struct Item {
      std::vector<std::uint32_t> ranks, gens;
      std::vector<std::uint64_t> bits;
      std::int64_t seed_idx;
    };
    struct JoinResult {
      std::vector<std::uint32_t> ranks, gens;
    };
    std::size_t head = 0;
    while (head < subs.size()) {
      std::size_t chunk = std::min<std::size_t>(
          subs.size() - head, std::max<std::size_t>(32, std::size_t(n_threads) * 8));
      // snapshot: inserts below grow `subs` and would invalidate references
      std::vector<Item> items(chunk);
      for (std::size_t k = 0; k < chunk; ++k) {
        const BuildSub &b = subs[head + k];
        std::size_t id = head + k;
        items[k].ranks = b.ranks;
        items[k].gens = b.gens;
        items[k].bits = b.bits;
        items[k].seed_idx = id < seed_index_of.size() ? seed_index_of[id] : -1;
        if (items[k].ranks.size() == n) items[k].seed_idx = -2; // ambient: nothing to join
      }
      head += chunk;

      std::vector<std::vector<JoinResult>> results(chunk);
      auto process = [&](std::size_t k, ClosureScratch &scratch) {
        const Item &A = items[k];
        if (A.seed_idx == -2) return;
        std::vector<std::uint32_t> gens;
        std::vector<std::uint32_t> out;
        for (std::size_t si = 0; si < seeds.size(); ++si) {
          const Seed &s = seeds[si];
          if (A.seed_idx >= 0 && static_cast<std::int64_t>(si) <= A.seed_idx) continue;
          if (bit_get(A.bits, s.gen)) continue; // seed already inside
          gens = A.gens;
          gens.push_back(s.gen);
          std::uint32_t cnt = rank_closure(E, A.ranks.data(), A.ranks.size(),
                                           gens.data(), gens.size(), threshold,
                                           scratch, &out);
          if (cnt == 0) continue; // generated the ambient group
          results[k].push_back({out, gens});
        }
      };

      if (n_threads <= 1 || chunk <= 1) {
        for (std::size_t k = 0; k < chunk; ++k) process(k, ws);
      } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        unsigned nt = static_cast<unsigned>(std::min<std::size_t>(n_threads, chunk));
        for (unsigned t = 0; t < nt; ++t)
          pool.emplace_back([&] {
            ClosureScratch local;
            local.init(n);
            for (;;) {
              std::size_t k = next.fetch_add(1);
              if (k >= chunk) break;
              process(k, local);
            }
          });
        for (auto &t : pool) t.join();
      }
      for (std::size_t k = 0; k < chunk; ++k)
        for (JoinResult &r : results[k])
          insert(std::move(r.ranks), std::move(r.gens));
    }
  }

  // deterministic final indexing: sort by (order, canonical rank list)
  std::vector<std::uint32_t> perm(subs.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (subs[a].ranks.size() != subs[b].ranks.size())
      return subs[a].ranks.size() < subs[b].ranks.size();
    return subs[a].ranks < subs[b].ranks;
  });

  SubgroupLattice lat;
  lat.ambient = g;
  lat.ambient_simple = simple;
  lat.subs.resize(subs.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    BuildSub &b = subs[perm[i]];
    lat.subs[i].ranks = std::move(b.ranks);
    lat.subs[i].gens = std::move(b.gens);
    lat.subs[i].bits = std::move(b.bits);
  }
  subs.clear();
  index.clear();
  const std::uint32_t nsubs = static_cast<std::uint32_t>(lat.subs.size());
  lat.bottom_id = 0;
  lat.top_id = nsubs - 1;

  // the full inclusion order as per-subgroup overgroup bitsets
  const std::uint32_t sub_words = (nsubs + 63) / 64;
  lat.over.assign(nsubs, std::vector<std::uint64_t>(sub_words, 0));
  for (std::uint32_t i = 0; i < nsubs; ++i) {
    std::uint64_t oi = lat.subs[i].order();
    bit_set(lat.over[i], i);
    for (std::uint32_t j = i + 1; j < nsubs; ++j) {
      std::uint64_t oj = lat.subs[j].order();
      if (oj == oi || oj % oi) continue; // equal orders cannot nest strictly
      if (bits_subset(lat.subs[i].bits, lat.subs[j].bits))
        bit_set(lat.over[i], j);
    }
  }

  lat.maximal.assign(nsubs, false);
  for (std::uint32_t i = 0; i + 1 < nsubs; ++i)
    if (bits_count(lat.over[i]) == 2) lat.maximal[i] = true;

  // MaxInt(G): {G} plus the closure of the maximal subgroups under intersection
  lat.maxint.assign(nsubs, false);
  lat.maxint[lat.top_id] = true;
  {
    std::vector<std::uint32_t> members{lat.top_id};
    std::vector<std::uint32_t> queue;
    for (std::uint32_t i = 0; i < nsubs; ++i)
      if (lat.maximal[i]) queue.push_back(i);
    std::vector<std::uint64_t> tmp(words);
    std::vector<std::uint32_t> ranks;
    while (!queue.empty()) {
      std::uint32_t x = queue.back();
      queue.pop_back();
      if (lat.maxint[x]) continue;
      lat.maxint[x] = true;
      std::vector<std::uint32_t> cur = members;
      members.push_back(x);
      for (std::uint32_t m : cur) {
        for (std::uint32_t w = 0; w < words; ++w)
          tmp[w] = lat.subs[x].bits[w] & lat.subs[m].bits[w];
        ranks.clear();
        for (std::uint32_t w = 0; w < words; ++w) {
          std::uint64_t bitsw = tmp[w];
          while (bitsw) {
            ranks.push_back(w * 64 + std::countr_zero(bitsw));
            bitsw &= bitsw - 1;
          }
        }
        auto id = lat.find_subgroup(ranks);
        if (!id)
          throw std::logic_error("lattice incomplete: missing intersection");
        if (!lat.maxint[*id]) queue.push_back(*id);
      }
    }
  }

  // Frattini subgroup: intersection of all maximal subgroups (G if none)
  {
    std::vector<std::uint64_t> phi(words, ~std::uint64_t(0));
    bool any = false;
    for (std::uint32_t i = 0; i < nsubs; ++i)
      if (lat.maximal[i]) {
        any = true;
        for (std::uint32_t w = 0; w < words; ++w) phi[w] &= lat.subs[i].bits[w];
      }
    if (!any) {
      lat.frattini_id = lat.top_id;
    } else {
      std::vector<std::uint32_t> ranks;
      for (std::uint32_t w = 0; w < words; ++w) {
        std::uint64_t bw = phi[w];
        while (bw) {
          std::uint32_t r = w * 64 + std::countr_zero(bw);
          if (r < n) ranks.push_back(r);
          bw &= bw - 1;
        }
      }
      auto id = lat.find_subgroup(ranks);
      if (!id) throw std::logic_error("lattice incomplete: missing Frattini subgroup");
      lat.frattini_id = *id;
    }
  }

  // conjugacy classes of subgroups: orbits under generator conjugation
  lat.class_of.assign(nsubs, 0);
  {
    std::vector<bool> seen(nsubs, false);
    std::vector<std::uint32_t> ranks;
    for (std::uint32_t i = 0; i < nsubs; ++i) {
      if (seen[i]) continue;
      SubgroupClass cls;
      cls.rep = i;
      std::vector<std::uint32_t> orbit{i};
      seen[i] = true;
      for (std::size_t h = 0; h < orbit.size(); ++h) {
        for (std::size_t k = 0; k < E.num_gens(); ++k) {
          const auto &ct = E.conj_table(k);
          ranks.clear();
          for (std::uint32_t r : lat.subs[orbit[h]].ranks) ranks.push_back(ct[r]);
          std::sort(ranks.begin(), ranks.end());
          auto id = lat.find_subgroup(ranks);
          if (!id) throw std::logic_error("lattice incomplete: missing conjugate");
          if (!seen[*id]) {
            seen[*id] = true;
            orbit.push_back(*id);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      cls.members = std::move(orbit);
      std::uint32_t c = static_cast<std::uint32_t>(lat.classes.size());
      for (std::uint32_t m : cls.members) lat.class_of[m] = c;
      lat.classes.push_back(std::move(cls));
    }
  }

  // normalizer of each class representative, by the generator-image test
  {
    std::vector<std::uint32_t> ranks;
    for (SubgroupClass &cls : lat.classes) {
      const Subgroup &rep = lat.subs[cls.rep];
      ranks.clear();
      if (rep.order() == n || rep.order() == 1) {
        cls.normalizer = lat.top_id;
      } else {
        for (std::uint32_t gr = 0; gr < n; ++gr) {
          std::uint32_t gi = E.inv(gr);
          bool ok = true;
          for (std::uint32_t hgen : rep.gens)
            if (!bit_get(rep.bits, E.mul(E.mul(gi, hgen), gr))) { ok = false; break; }
          if (ok) ranks.push_back(gr);
        }
        auto id = lat.find_subgroup(ranks);
        if (!id) throw std::logic_error("lattice incomplete: missing normalizer");
        cls.normalizer = *id;
      }
      // orbit-stabilizer consistency
      if (cls.members.size() * lat.subs[cls.normalizer].order() != n)
        throw std::logic_error("class size inconsistent with normalizer index");
    }
  }

  return lat;
}

} // namespace mulambda

#endif
