#ifndef MULAMBDA_GF_HPP
#define MULAMBDA_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "intmath.hpp"

namespace mulambda {

// GF(p^e) with a fixed modulus polynomial per (p,e), so element numbering is
// reproducible across runs.  Elements are encoded 0..q-1 as base-p digit
// strings of their polynomial coefficients (little-endian).
class FiniteField {
public:
  explicit FiniteField(std::int64_t q) {
    auto pe = prime_power(q);
    if (!pe) throw std::invalid_argument("FiniteField: q is not a prime power");
    p_ = pe->first;
    e_ = pe->second;
    q_ = q;
    if (q_ > 4096) throw std::invalid_argument("FiniteField: q too large");
    modulus_ = fixed_modulus(p_, e_);
    build_tables();
  }

  std::int64_t p() const { return p_; }
  int e() const { return e_; }
  std::int64_t q() const { return q_; }
  const std::vector<int> &modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }

  int inv(int a) const {
    if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
    return inv_[a];
  }

  int pow(int a, std::int64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    std::int64_t m = k % (q_ - 1);
    if (m < 0) m += q_ - 1;
    int r = 1, base = a;
    while (m > 0) {
      if (m & 1) r = mul(r, base);
      base = mul(base, base);
      m >>= 1;
    }
    return r;
  }

  // smallest-numbered generator of the multiplicative group
  int primitive_element() const { return primitive_; }

  std::int64_t element_order(int a) const {
    if (a == 0) throw std::domain_error("element_order of zero");
    std::int64_t n = 1;
    int x = a;
    while (x != 1) { x = mul(x, a); ++n; }
    return n;
  }

  // monic modulus for GF(p^e): small table of standard choices, otherwise the
  // lexicographically smallest irreducible (both deterministic)
  static std::vector<int> fixed_modulus(std::int64_t p, int e);

private:
  void build_tables();

  std::int64_t p_, q_;
  int e_;
  std::vector<int> modulus_; // coefficients c0..ce, ce = 1
  std::vector<int> add_, mul_, neg_, inv_;
  int primitive_ = 0;
};

inline std::vector<int> FiniteField::fixed_modulus(std::int64_t p, int e) {
  if (e == 1) return {0, 1}; // x - 0 placeholder; arithmetic is plain mod p
  struct Entry { int p, e; std::vector<int> coeffs; };
  // Conway polynomials for the small fields used by the group constructors
  static const std::vector<Entry> table = {
      {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},    {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 2, {2, 2, 1}},          {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {5, 2, {2, 4, 1}},          {5, 3, {3, 3, 0, 1}},
      {7, 2, {3, 6, 1}},          {11, 2, {2, 7, 1}},
      {13, 2, {2, 12, 1}},
  };
  for (const Entry &t : table)
    if (t.p == p && t.e == e) return t.coeffs;

  // fall back to the lexicographically smallest monic irreducible of degree e
  auto is_irreducible = [&](const std::vector<int> &f) {
    // no roots, and no monic divisor of degree 2..e/2 (trial division)
    auto eval = [&](std::int64_t x) {
      std::int64_t acc = 0;
      for (int i = e; i >= 0; --i) acc = (acc * x + f[i]) % p;
      return acc;
    };
    for (std::int64_t x = 0; x < p; ++x)
      if (eval(x) == 0) return false;
    // polynomial trial division for degrees 2..e/2
    for (int d = 2; 2 * d <= e; ++d) {
      std::vector<int> g(d + 1, 0);
      g[d] = 1;
      for (;;) {
        // test g | f via synthetic division
        std::vector<std::int64_t> r(f.begin(), f.end());
        for (int i = e; i >= d; --i) {
          std::int64_t c = r[i] % p;
          if (c == 0) continue;
          for (int j = 0; j <= d; ++j)
            r[i - d + j] = (r[i - d + j] - c * g[j]) % p;
        }
        bool zero = true;
        for (int i = 0; i < d; ++i)
          if (r[i] % p != 0) { zero = false; break; }
        if (zero) return false;
        // next candidate divisor
        int k = 0;
        while (k < d && ++g[k] == p) { g[k] = 0; ++k; }
        if (k == d) break;
      }
    }
    return true;
  };
  std::vector<int> f(e + 1, 0);
  f[e] = 1;
  for (;;) {
    if (is_irreducible(f)) return f;
    int k = 0;
    while (k < e && ++f[k] == p) { f[k] = 0; ++k; }
    if (k == e) throw std::logic_error("no irreducible polynomial found");
  }
}

inline void FiniteField::build_tables() {
  auto to_digits = [&](int a) {
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i) { d[i] = a % static_cast<int>(p_); a /= static_cast<int>(p_); }
    return d;
  };
  auto from_digits = [&](const std::vector<int> &d) {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * static_cast<int>(p_) + d[i];
    return a;
  };
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = to_digits(a);
    std::vector<int> dn(e_);
    for (int i = 0; i < e_; ++i) dn[i] = (static_cast<int>(p_) - da[i]) % static_cast<int>(p_);
    neg_[a] = from_digits(dn);
    for (int b = 0; b < q_; ++b) {
      auto db = to_digits(b);
      std::vector<int> ds(e_);
      for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % static_cast<int>(p_);
      add_[a * q_ + b] = from_digits(ds);
      // polynomial product reduced mod the modulus
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[i + j] = static_cast<int>((prod[i + j] + static_cast<std::int64_t>(da[i]) * db[j]) % p_);
      for (int i = 2 * e_ - 2; i >= e_; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < e_; ++j) {
          prod[i - e_ + j] =
              static_cast<int>(((prod[i - e_ + j] - static_cast<std::int64_t>(c) * modulus_[j]) % p_ + p_) % p_);
        }
      }
      std::vector<int> dm(prod.begin(), prod.begin() + e_);
      mul_[a * q_ + b] = from_digits(dm);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
  // every nonzero element invertible == modulus irreducible
  for (int a = 1; a < q_; ++a)
    if (inv_[a] == 0)
      throw std::logic_error("FiniteField: modulus is not irreducible");
  for (int a = 2; a < q_; ++a)
    if (element_order(a) == q_ - 1) { primitive_ = a; break; }
  if (q_ == 2) primitive_ = 1;
  if (primitive_ == 0)
    throw std::logic_error("FiniteField: no primitive element found");
}

} // namespace mulambda

#endif
