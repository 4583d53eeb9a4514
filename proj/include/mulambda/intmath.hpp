#ifndef MULAMBDA_INTMATH_HPP
#define MULAMBDA_INTMATH_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mulambda {

// All Moebius-style bookkeeping is done in checked 64-bit arithmetic:
// an overflow is a bug in the caller's scale assumptions and must not wrap.
struct overflow_error : std::runtime_error {
  overflow_error() : std::runtime_error("integer overflow in checked arithmetic") {}
};

inline std::int64_t chk_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error();
  return r;
}

inline std::int64_t chk_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error();
  return r;
}

inline std::int64_t chk_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error();
  return r;
}

// exact division; throws if the quotient is not integral
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (b == 0 || a % b != 0) throw std::runtime_error("exact_div: not divisible");
  return a / b;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^e with p prime, e >= 1; nullopt if q is not a prime power
inline std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  int e = 0;
  std::int64_t m = q;
  while (m % p == 0) { m /= p; ++e; }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, e);
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, big;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) big.push_back(n / d);
    }
  }
  small.insert(small.end(), big.rbegin(), big.rend());
  return small;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r = chk_mul(r, b);
  return r;
}

// 128-bit checked arithmetic for the closed-form tables, whose group orders
// exceed 64 bits at the top of the q-sweep
using wide = __int128;

inline wide wide_mul(wide a, wide b) {
  wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error();
  return r;
}

inline wide wide_add(wide a, wide b) {
  wide r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error();
  return r;
}

inline wide wide_exact_div(wide a, wide b) {
  if (b == 0 || a % b != 0) throw std::runtime_error("wide_exact_div: not divisible");
  return a / b;
}

inline std::string wide_to_string(wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

inline wide wide_pow(wide b, int e) {
  wide r = 1;
  while (e-- > 0) r = wide_mul(r, b);
  return r;
}

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) { n /= p; ++a; }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

} // namespace mulambda

#endif
