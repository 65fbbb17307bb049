#pragma once

// Small exact integer helpers shared by all modules.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace weilcodes::arith {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

/// base^exp with overflow detection.
inline std::int64_t ipow(std::int64_t base, std::uint64_t exp) {
  std::int64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// p^(num/2); `num` must be even and non-negative.
inline std::int64_t half_pow(std::int64_t p, std::int64_t num) {
  if (num < 0 || num % 2 != 0) throw std::logic_error("half_pow: exponent numerator must be even and >= 0");
  return ipow(p, static_cast<std::uint64_t>(num / 2));
}

/// Non-negative residue of a mod m.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = (r * x) % m;
    x = (x * x) % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

/// Legendre symbol (x/p) in {-1, 0, 1} for an odd prime p; this is the quadratic character of F_p.
inline int legendre(std::int64_t x, std::uint32_t p) {
  auto r = static_cast<std::uint64_t>(mod(x, p));
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Multiplicative inverse in F_p.
inline std::uint32_t inv_mod(std::int64_t x, std::uint32_t p) {
  auto r = static_cast<std::uint64_t>(mod(x, p));
  if (r == 0) throw std::domain_error("inverse of zero mod p");
  return static_cast<std::uint32_t>(powmod(r, p - 2, p));
}

}  // namespace weilcodes::arith
