#ifndef MULAMBDA_MOEBIUS_HPP
#define MULAMBDA_MOEBIUS_HPP

#include <cstdint>
#include <vector>

#include "intmath.hpp"
#include "lattice.hpp"

namespace mulambda {

// number-theoretic Moebius function
inline int moebius_integer(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius_integer: n must be positive");
  int k = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++k;
  }
  if (n > 1) ++k;
  return k % 2 ? -1 : 1;
}

struct MoebiusTable {
  std::vector<std::int64_t> mu;      // per subgroup id
  std::vector<std::int64_t> lambda;  // per class id
  std::vector<bool> maxint;          // per subgroup id, copied from the lattice
};

// mu(H) = mu_L(H, G): top-down recursion mu(G)=1, mu(H) = -sum_{H<K<=G} mu(K).
// With restrict_to_maxint the overgroup sum only visits MaxInt members and
// everything outside MaxInt is assigned zero (Hall's lemma); both modes agree.
inline std::vector<std::int64_t> mu_lattice(const SubgroupLattice &lat,
                                            bool restrict_to_maxint = true) {
  const std::uint32_t nsubs = static_cast<std::uint32_t>(lat.size());
  std::vector<std::int64_t> mu(nsubs, 0);
  mu[lat.top_id] = 1;
  // ids are sorted by order, so descending id order resolves all overgroups first
  for (std::uint32_t ii = nsubs; ii-- > 0;) {
    if (ii == lat.top_id) continue;
    if (restrict_to_maxint && !lat.maxint[ii]) { mu[ii] = 0; continue; }
    std::int64_t acc = 0;
    const auto &row = lat.over[ii];
    for (std::uint32_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        std::uint32_t j = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (j == ii) continue;
        if (restrict_to_maxint && !lat.maxint[j]) continue;
        acc = chk_add(acc, mu[j]);
      }
    }
    mu[ii] = chk_sub(0, acc);
  }
  return mu;
}

// lambda(H) = mu_C([H], [G]) over the class poset
inline std::vector<std::int64_t> lambda_poset(const SubgroupLattice &lat,
                                              const ClassPoset &cp,
                                              bool restrict_to_maxint = true) {
  const std::uint32_t nc = cp.count;
  // MaxInt is a union of conjugacy classes
  std::vector<bool> class_maxint(nc, false);
  for (std::uint32_t c = 0; c < nc; ++c)
    class_maxint[c] = lat.maxint[lat.classes[c].rep];
  std::uint32_t top_class = lat.class_of[lat.top_id];
  std::vector<std::int64_t> lam(nc, 0);
  lam[top_class] = 1;
  // process classes by decreasing representative order
  std::vector<std::uint32_t> order_idx(nc);
  for (std::uint32_t c = 0; c < nc; ++c) order_idx[c] = c;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lat.subs[lat.classes[a].rep].order() > lat.subs[lat.classes[b].rep].order();
  });
  for (std::uint32_t c : order_idx) {
    if (c == top_class) continue;
    if (restrict_to_maxint && !class_maxint[c]) { lam[c] = 0; continue; }
    std::int64_t acc = 0;
    for (std::uint32_t j = 0; j < nc; ++j) {
      if (j == c || !cp.leq(c, j)) continue;
      if (restrict_to_maxint && !class_maxint[j]) continue;
      acc = chk_add(acc, lam[j]);
    }
    lam[c] = chk_sub(0, acc);
  }
  return lam;
}

inline MoebiusTable moebius_table(const SubgroupLattice &lat, const ClassPoset &cp,
                                  bool restrict_to_maxint = true) {
  MoebiusTable t;
  t.mu = mu_lattice(lat, restrict_to_maxint);
  t.lambda = lambda_poset(lat, cp, restrict_to_maxint);
  t.maxint = lat.maxint;
  return t;
}

} // namespace mulambda

#endif
