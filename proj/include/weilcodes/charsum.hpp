#pragma once

// Exact additive character sums with values in Z[zeta_p].

#include "weilcodes/gf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weilcodes {

/// Element sum_i c_i zeta_p^i of Z[zeta_p]. Always stored with c_{p-1} = 0, so equality is
/// plain coefficient equality.
class CycInt {
 public:
  explicit CycInt(std::uint32_t p);
  CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs);

  static CycInt integer(std::uint32_t p, std::int64_t n);
  static CycInt zeta_power(std::uint32_t p, std::int64_t e);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  /// The rational integer this equals, if it is one.
  std::optional<std::int64_t> to_integer() const;
  /// zeta -> zeta^k for k prime to p.
  CycInt galois(std::int64_t k) const;
  CycInt conj() const { return galois(-1); }
  std::string to_string() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator*(std::int64_t k) const;
  CycInt& operator+=(const CycInt& o);
  bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }

 private:
  void check(const CycInt& o) const;
  void canonicalize();

  std::uint32_t p_;
  std::vector<std::int64_t> c_;
};

/// The constant L, resolved as i^{((p-1)/2)^2}: 1 for p = 1 mod 4, i for p = 3 mod 4.
class GaussScale {
 public:
  explicit GaussScale(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  /// L = i^{sign_exponent}, sign_exponent in {0, 1}.
  int sign_exponent() const noexcept { return sign_exponent_; }
  /// L^e for even e, as an integer. Odd e throws.
  int even_power(std::int64_t e) const;

 private:
  std::uint32_t p_;
  int sign_exponent_;
};

/// scalar * (G_1 if with_g1) * zeta_p^zeta_exp.
struct ClosedForm {
  std::int64_t scalar = 0;
  bool with_g1 = false;
  std::uint32_t zeta_exp = 0;

  CycInt expand(std::uint32_t p) const;
};

CycInt gauss_sum_bruteforce(const FiniteField& field);
ClosedForm gauss_sum_closed_form(std::uint32_t p, std::uint32_t m);
CycInt gauss_sum_closed(std::uint32_t p, std::uint32_t m);

/// sum_x zeta^{Tr(bx)}, summed term by term.
CycInt orthogonality_sum(const FFElement& b);

/// S_{m,u}(a, b) = sum_x zeta^{Tr(a x^{p^u+1} + b x)}. ZeroA if a = 0.
CycInt weil_sum_bruteforce(std::uint64_t u, const FFElement& a, const FFElement& b);
ClosedForm weil_sum_closed_form(std::uint64_t u, const FFElement& a, const FFElement& b);
CycInt weil_sum_closed(std::uint64_t u, const FFElement& a, const FFElement& b);

/// Fast path for S_{m,u}(z1, z2 b) with z1, z2 in F_p^*, driven by gamma_b.
CycInt weil_sum_scalar(std::uint64_t u, std::int64_t z1, std::int64_t z2, const FFElement& b);

/// Q_m(a, b) = sum_x zeta^{Tr(a x^2 + b x)}.
CycInt quad_sum_bruteforce(const FFElement& a, const FFElement& b);
CycInt quad_sum_closed(const FFElement& a, const FFElement& b);

/// Whether z^{(p^m-1)/(p^v+1)} = 1 in F_{p^m}, v = gcd(m, u). OddQuotient if m/v is odd.
bool restricted_power_check(std::int64_t z, const FiniteField& field, std::uint64_t u);

/// The designated solution of X^{p^{2u}} + X = -b^{p^u}, if any.
std::optional<FFElement> gamma(std::uint64_t u, const FFElement& b);

}  // namespace weilcodes
