#ifndef MULAMBDA_FAMILIES_HPP
#define MULAMBDA_FAMILIES_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "intmath.hpp"
#include "moebius.hpp"
#include "property.hpp"
#include "zoo.hpp"

namespace mulambda {

struct regime_error : std::runtime_error {
  explicit regime_error(const std::string &what) : std::runtime_error(what) {}
};

// one subgroup-class row of a closed-form family table
struct FamilyRow {
  std::string family;
  std::string label;
  std::int64_t h = 0; // divisor parameter; 0 when the row has none
  wide order = 0;
  wide mu = 0;
  wide normalizer_order = 0;
  wide lambda = 0;
  std::string condition; // the side condition that admitted the row
};

namespace detail {

inline bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

inline FamilyRow row(std::string family, std::string label, std::int64_t h,
                     wide order, wide mu, wide norm, wide lambda,
                     std::string cond) {
  FamilyRow r;
  r.family = std::move(family);
  r.label = std::move(label);
  r.h = h;
  r.order = order;
  r.mu = mu;
  r.normalizer_order = norm;
  r.lambda = lambda;
  r.condition = std::move(cond);
  return r;
}

// L2(q), q = 2^e
inline std::vector<FamilyRow> l2_even_rows(std::int64_t q, int e) {
  std::vector<FamilyRow> rows;
  const std::string fam = "l2_even";
  const int me = moebius_integer(e);
  for (std::int64_t h : divisors(e)) {
    if (h <= 1) continue;
    const int m = moebius_integer(e / h);
    const std::int64_t ph = ipow(2, static_cast<int>(h));
    rows.push_back(row(fam, "S_h", h, psl2_order(ph), m, psl2_order(ph), m,
                       "h|e, h>1"));
    rows.push_back(row(fam, "M_{h,2r}", h, chk_mul(ph, ph - 1), -m,
                       chk_mul(ph, ph - 1), -m, "h|e, h>1"));
    rows.push_back(row(fam, "D_{4r}", h, 2 * (ph - 1), -m, 2 * (ph - 1), -m,
                       "h|e, h>1"));
    rows.push_back(row(fam, "D_{4s}", h, 2 * (ph + 1), -m, 2 * (ph + 1), -m,
                       "h|e, h>1"));
    rows.push_back(row(fam, "C_{2r}", h, ph - 1,
                       chk_mul(exact_div(2 * (q - 1), ph - 1), m), 2 * (q - 1), m,
                       "h|e, h>1"));
  }
  rows.push_back(row(fam, "C_2", 0, 2, chk_mul(-q, me), q, -2 * me, "-"));
  rows.push_back(row(fam, "1", 0, 1, chk_mul(pgl2_order(q), me), pgl2_order(q), me, "-"));
  return rows;
}

// L2(q), q = p^e, p odd; e > 2, or e = 2 with p = +-1 (mod 5)
inline std::vector<FamilyRow> l2_odd_rows(std::int64_t q, std::int64_t p, int e) {
  std::vector<FamilyRow> rows;
  const std::string fam = "l2_odd";
  const int me = moebius_integer(e);
  for (std::int64_t h : divisors(e)) {
    const int m = moebius_integer(e / h);
    const std::int64_t ph = ipow(p, static_cast<int>(h));
    const std::int64_t r2 = ph - 1, s2 = ph + 1;      // 2r(h), 2s(h)
    const bool even_quot = ((e / h) % 2 == 0);
    if (even_quot) {
      rows.push_back(row(fam, "G_h", h, pgl2_order(ph), m, pgl2_order(ph), m,
                         "e/h even"));
      rows.push_back(row(fam, "M_{h,2r}", h, chk_mul(ph, r2), -m, chk_mul(ph, r2),
                         -m, "e/h even"));
      if (ph != 3) {
        std::int64_t norm = std::gcd(4 * r2, q - 1);
        std::int64_t lam = exact_div(-2 * m, std::gcd<std::int64_t>(2, exact_div(q - 1, 2 * r2)));
        rows.push_back(row(fam, "D_{4r}", h, 2 * r2, -2 * m, norm, lam,
                           "e/h even, p^h != 3"));
      }
      {
        std::int64_t norm = std::gcd(4 * s2, q - 1);
        std::int64_t lam = exact_div(-2 * m, std::gcd<std::int64_t>(2, exact_div(q - 1, 2 * s2)));
        rows.push_back(row(fam, "D_{4s}", h, 2 * s2, -2 * m, norm, lam, "e/h even"));
      }
      if (ph != 3)
        rows.push_back(row(fam, "C_{2r}", h, r2, chk_mul(exact_div(2 * (q - 1), r2), m),
                           q - 1, 2 * m, "e/h even, p^h != 3"));
    } else {
      rows.push_back(row(fam, "S_h", h, psl2_order(ph), m, psl2_order(ph), m,
                         "e/h odd"));
      if (ph != 3)
        rows.push_back(row(fam, "M_{h,r}", h, chk_mul(ph, exact_div(r2, 2)), -m,
                           chk_mul(ph, exact_div(r2, 2)), -m, "e/h odd, p^h != 3"));
      if (ph != 3 && ph != 5)
        rows.push_back(row(fam, "D_{2r}", h, r2, -m, r2, -m,
                           "e/h odd, p^h not in {3,5}"));
      if (ph != 3)
        rows.push_back(row(fam, "D_{2s}", h, s2, -m, s2, -m, "e/h odd, p^h != 3"));
      if (ph != 3 && ph != 5)
        rows.push_back(row(fam, "C_r", h, exact_div(r2, 2),
                           chk_mul(exact_div(2 * (q - 1), r2), m), q - 1, m,
                           "e/h odd, p^h not in {3,5}"));
    }
  }
  // special rows D_4, C_3, C_2, {1}
  {
    // alpha: -6 when e is a power of 2; beta: 6 mu(e) for p=3, e even;
    // 3 mu(e) for p in {3,5}, e odd
    std::int64_t alpha = is_power_of_two(e) ? -6 : 0;
    std::int64_t beta = 0;
    if (p == 3 && e % 2 == 0) beta = 6 * me;
    else if ((p == 3 || p == 5) && e % 2 == 1) beta = 3 * me;
    std::int64_t mu4 = alpha - beta;
    bool pm1mod8 = (q % 8 == 1 || q % 8 == 7);
    std::int64_t norm = pm1mod8 ? 24 : 12;
    std::int64_t lam = exact_div(mu4, pm1mod8 ? 6 : 3);
    rows.push_back(row(fam, "D_4", 0, 4, mu4, norm, lam,
                       pm1mod8 ? "q = +-1 (mod 8)" : "q != +-1 (mod 8)"));
  }
  {
    std::int64_t mu3 = 0, lam = 0;
    std::string cond = "otherwise";
    if (p == 7 && e % 2 == 1) {
      mu3 = chk_mul(exact_div(q - 1, 3), me);
      lam = me;
      cond = "p=7, e odd";
    } else if (p == 3) {
      mu3 = exact_div(q, 3); // corrected value for q = 3^e, e > 2
      lam = 1;
      cond = "p=3";
    }
    std::int64_t norm = q % 3 == 0 ? q : (q % 3 == 1 ? q - 1 : q + 1);
    rows.push_back(row(fam, "C_3", 0, 3, mu3, norm, lam, cond));
  }
  {
    std::int64_t gamma = is_power_of_two(e) ? exact_div(q - 1, 2) : 0;
    std::int64_t delta = 0;
    if (p == 3 && e % 2 == 0) delta = chk_mul(-(q - 1), me);
    else if (p == 3 && e % 2 == 1) delta = chk_mul(exact_div(q + 1, 2), me);
    else if (p == 5 && e % 2 == 1) delta = chk_mul(-exact_div(q - 1, 2), me);
    std::int64_t mu2 = chk_sub(gamma, delta);
    bool one_mod4 = q % 4 == 1;
    std::int64_t norm = one_mod4 ? q - 1 : q + 1;
    std::int64_t lam = exact_div(2 * mu2, norm);
    rows.push_back(row(fam, "C_2", 0, 2, mu2, norm, lam,
                       one_mod4 ? "q = 1 (mod 4)" : "q = 3 (mod 4)"));
  }
  {
    std::int64_t mu1 = 0, lam = 0;
    std::string cond = "otherwise";
    if (p == 3 && e % 2 == 1) {
      mu1 = chk_mul(psl2_order(q), me);
      lam = me;
      cond = "p=3, e odd";
    }
    rows.push_back(row(fam, "1", 0, 1, mu1, psl2_order(q), lam, cond));
  }
  return rows;
}

// L2(q), q = p^2, p >= 7, p = +-2 (mod 5); the source table lists the
// non-maximal classes, the maximal ones are appended with mu = lambda = -1
inline std::vector<FamilyRow> l2_odd_square_rows(std::int64_t q, std::int64_t p) {
  std::vector<FamilyRow> rows;
  const std::string fam = "l2_odd_square";
  rows.push_back(row(fam, "C_p:C_{p-1}", 0, chk_mul(p, p - 1), 1, chk_mul(p, p - 1), 1, "-"));
  rows.push_back(row(fam, "C_{(q-1)/2}", 0, exact_div(q - 1, 2), 2, q - 1, 1, "-"));
  rows.push_back(row(fam, "D_{2(p+1)}", 0, 2 * (p + 1), 2,
                     chk_mul(p + 1, std::gcd<std::int64_t>(4, p - 1)),
                     exact_div(2, std::gcd<std::int64_t>(2, exact_div(p - 1, 2))), "-"));
  rows.push_back(row(fam, "D_{2(p-1)}", 0, 2 * (p - 1), 2,
                     chk_mul(p - 1, std::gcd<std::int64_t>(4, p + 1)),
                     exact_div(2, std::gcd<std::int64_t>(2, exact_div(p + 1, 2))), "-"));
  rows.push_back(row(fam, "C_{p-1}", 0, p - 1, -2 * (p + 1), q - 1, -2, "-"));
  rows.push_back(row(fam, "A_4", 0, 12, 2, 24, 1, "-"));
  rows.push_back(row(fam, "D_10", 0, 10, 2, 10, 2, "-"));
  rows.push_back(row(fam, "D_6", 0, 6, 2, 12, 1, "-"));
  rows.push_back(row(fam, "D_4", 0, 4, -6, 24, -1, "-"));
  rows.push_back(row(fam, "C_3", 0, 3, exact_div(-2 * (q - 1), 3), q - 1, -2, "-"));
  rows.push_back(row(fam, "C_2", 0, 2, exact_div(-3 * (q - 1), 2), q - 1, -3, "-"));
  rows.push_back(row(fam, "1", 0, 1, 0, psl2_order(q), 0, "-"));
  // maximal classes (per class; the table omits them)
  rows.push_back(row(fam, "E_q:C_{(q-1)/2}", 0, exact_div(chk_mul(q, q - 1), 2), -1,
                     exact_div(chk_mul(q, q - 1), 2), -1, "maximal"));
  rows.push_back(row(fam, "D_{q-1}", 0, q - 1, -1, q - 1, -1, "maximal"));
  rows.push_back(row(fam, "D_{q+1}", 0, q + 1, -1, q + 1, -1, "maximal"));
  rows.push_back(row(fam, "PGL(2,p)", 0, pgl2_order(p), -1, pgl2_order(p), -1, "maximal"));
  rows.push_back(row(fam, "A_5", 0, 60, -1, 60, -1, "maximal"));
  return rows;
}

} // namespace detail

inline std::vector<FamilyRow> l2_rows(std::int64_t q) {
  auto pe = prime_power(q);
  if (!pe) throw regime_error("l2: q = " + std::to_string(q) + " is not a prime power");
  auto [p, e] = *pe;
  if (p == 2) {
    if (e < 2) throw regime_error("l2: q = 2 is outside the table regime");
    return detail::l2_even_rows(q, e);
  }
  if (e == 1)
    throw regime_error("l2: prime q is outside the table regime (direct computation)");
  if (q == 9 || q == 25)
    throw regime_error("l2: q = " + std::to_string(q) +
                       " is outside the table regime (direct computation)");
  if (e > 2 || (e == 2 && (p % 5 == 1 || p % 5 == 4)))
    return detail::l2_odd_rows(q, p, e);
  if (e == 2 && p >= 7 && (p % 5 == 2 || p % 5 == 3))
    return detail::l2_odd_square_rows(q, p);
  throw regime_error("l2: q = " + std::to_string(q) + " is outside the table regime");
}

inline std::vector<FamilyRow> sz_rows(std::int64_t q) {
  auto pe = prime_power(q);
  if (!pe || pe->first != 2 || pe->second % 2 == 0 || pe->second < 3)
    throw regime_error("sz: q must be 2^e with odd e >= 3");
  const int e = pe->second;
  const int me = moebius_integer(e);
  auto szo = [](std::int64_t v) {
    wide w = v;
    return wide_mul(wide_mul(wide_mul(w, w), wide_add(wide_mul(w, w), 1)), w - 1);
  };
  std::vector<FamilyRow> rows;
  const std::string fam = "sz";
  for (std::int64_t h : divisors(e)) {
    if (h <= 1) continue;
    const int m = moebius_integer(e / h);
    const std::int64_t ph = ipow(2, static_cast<int>(h));
    const std::int64_t x = ipow(2, static_cast<int>((h + 1) / 2));
    std::int64_t a1 = ph + x + 1, a2 = ph - x + 1;
    if (a1 % 5 != 0) std::swap(a1, a2);
    const wide fh = wide_mul(wide_mul(wide(ph), ph), ph - 1);
    rows.push_back(detail::row(fam, "G(h)", h, szo(ph), m, szo(ph), m, "h|e, h>1"));
    rows.push_back(detail::row(fam, "F(h)", h, fh, -m, fh, -m, "h|e, h>1"));
    rows.push_back(detail::row(fam, "B_0(h)", h, 2 * (ph - 1), -m, 2 * (ph - 1), -m,
                               "h|e, h>1"));
    rows.push_back(detail::row(fam, "A_0(h)", h, ph - 1,
                               wide_mul(exact_div(2 * (q - 1), ph - 1), m), 2 * (q - 1),
                               m, "h|e, h>1"));
    rows.push_back(detail::row(fam, "B_1(h)", h, 4 * a1, -m, 4 * a1, -m, "h|e, h>1"));
    rows.push_back(detail::row(fam, "B_2(h)", h, 4 * a2, -m, 4 * a2, -m, "h|e, h>1"));
  }
  rows.push_back(detail::row(fam, "C_4", 0, 4, wide_mul(wide(-q), me), 2 * q, -2 * me, "-"));
  rows.push_back(detail::row(fam, "C_2", 0, 2,
                             wide_mul(-wide_exact_div(wide_mul(wide(q), q), 2), me),
                             wide_mul(wide(q), q), -me, "-"));
  rows.push_back(detail::row(fam, "1", 0, 1, wide_mul(szo(q), me), szo(q), me, "-"));
  return rows;
}

inline std::vector<FamilyRow> ree_rows(std::int64_t q) {
  auto pe = prime_power(q);
  if (!pe || pe->first != 3 || pe->second % 2 == 0 || pe->second < 3)
    throw regime_error("ree: q must be 3^e with odd e >= 3");
  const int e = pe->second;
  const int me = moebius_integer(e);
  auto ree_order = [](std::int64_t v) {
    wide c = wide_mul(wide_mul(wide(v), v), v);
    return wide_mul(wide_mul(c, wide_add(c, 1)), v - 1);
  };
  std::vector<FamilyRow> rows;
  const std::string fam = "ree";
  for (std::int64_t h : divisors(e)) {
    const int m = moebius_integer(e / h);
    const std::int64_t ph = ipow(3, static_cast<int>(h));
    const std::int64_t x = ipow(3, static_cast<int>((h + 1) / 2));
    const wide cube = wide_mul(wide_mul(wide(ph), ph), ph);
    rows.push_back(detail::row(fam, "R(3^h)", h, ree_order(ph), m, ree_order(ph), m,
                               "h|e"));
    rows.push_back(detail::row(fam, "(3^h+3^((h+1)/2)+1):6", h, 6 * (ph + x + 1), -m,
                               6 * (ph + x + 1), -m, "h|e"));
    if (h > 1)
      rows.push_back(detail::row(fam, "(3^h-3^((h+1)/2)+1):6", h, 6 * (ph - x + 1), -m,
                                 6 * (ph - x + 1), -m, "h|e, h>1"));
    rows.push_back(detail::row(fam, "3^(1+1+1):(3^h-1)", h, wide_mul(cube, ph - 1), -m,
                               wide_mul(cube, ph - 1), -m, "h|e"));
    if (h > 1) {
      rows.push_back(detail::row(fam, "2xPSL(2,3^h)", h, chk_mul(2, psl2_order(ph)), -m,
                                 chk_mul(2, psl2_order(ph)), -m, "h|e, h>1"));
      rows.push_back(detail::row(fam, "2x(3^h:(3^h-1)/2)", h, chk_mul(ph, ph - 1), m,
                                 chk_mul(ph, ph - 1), m, "h|e, h>1"));
      rows.push_back(detail::row(fam, "(2^2xD_((3^h+1)/2)):3", h, 6 * (ph + 1), -m,
                                 6 * (ph + 1), -m, "h|e, h>1"));
      rows.push_back(detail::row(fam, "2^2xD_((3^h+1)/2)", h, 2 * (ph + 1), 3 * m,
                                 2 * (ph + 1), 3 * m, "h|e, h>1"));
    }
  }
  rows.push_back(detail::row(fam, "2xPSL(2,3)", 0, 24, -2 * me, 24, -2 * me, "-"));
  rows.push_back(detail::row(fam, "2^3", 0, 8, 21 * me, 168, me, "-"));
  return rows;
}

// internal Eq.-consistency of a simple-group table: mu = [N:H] * lambda on
// every row
inline bool table_self_check(const std::vector<FamilyRow> &rows,
                             const FamilyRow **offender = nullptr) {
  for (const FamilyRow &r : rows) {
    if (r.normalizer_order % r.order != 0 ||
        r.mu != wide_mul(wide_exact_div(r.normalizer_order, r.order), r.lambda)) {
      if (offender) *offender = &r;
      return false;
    }
  }
  return true;
}

struct CrossCheckResult {
  bool match = true;
  // (order, mu, lambda, normalizer order) tuples present on one side only
  std::vector<std::array<wide, 4>> only_in_rows;
  std::vector<std::array<wide, 4>> only_in_brute;
};

// compares the nonzero-class multiset of a brute-forced group against the
// closed-form rows
inline CrossCheckResult cross_check_family(const GroupAnalysis &a,
                                           const std::vector<FamilyRow> &rows) {
  std::vector<std::array<wide, 4>> brute, table;
  for (std::uint32_t c = 0; c < a.lat.classes.size(); ++c) {
    const SubgroupClass &cls = a.lat.classes[c];
    std::int64_t mu = a.tab.mu[cls.rep];
    std::int64_t lam = a.tab.lambda[c];
    if (mu == 0 && lam == 0) continue;
    brute.push_back({static_cast<wide>(a.lat.subs[cls.rep].order()), mu, lam,
                     static_cast<wide>(a.lat.subs[cls.normalizer].order())});
  }
  for (const FamilyRow &r : rows) {
    if (r.mu == 0 && r.lambda == 0) continue;
    table.push_back({r.order, r.mu, r.lambda, r.normalizer_order});
  }
  std::sort(brute.begin(), brute.end());
  std::sort(table.begin(), table.end());
  CrossCheckResult res;
  std::set_difference(table.begin(), table.end(), brute.begin(), brute.end(),
                      std::back_inserter(res.only_in_rows));
  std::set_difference(brute.begin(), brute.end(), table.begin(), table.end(),
                      std::back_inserter(res.only_in_brute));
  res.match = res.only_in_rows.empty() && res.only_in_brute.empty();
  return res;
}

} // namespace mulambda

#endif
