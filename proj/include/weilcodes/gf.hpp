#pragma once

// Arithmetic in F_p and F_{p^m}.
//
// Elements are stored as a packed code c_0 + c_1 p + ... + c_{m-1} p^{m-1}, where c_k is the
// coefficient of alpha^k and alpha is a root of the field's modulus. Hot loops work on codes
// through FiniteField directly; FFElement is the checked value type for everything else.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weilcodes {

using Exponent = boost::multiprecision::cpp_int;

class FiniteField;
class FFElement;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  using Code = std::uint32_t;

  /// Builds F_{p^m}. Without a modulus, the lexicographically smallest monic irreducible
  /// polynomial of degree m is chosen (coefficients compared from degree 0 upwards).
  /// Throws CompositeP or ReducibleModulus.
  static FieldPtr create(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  /// m+1 coefficients, lowest degree first; the last is 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string describe() const;

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }
  Code from_prime(std::int64_t c) const;
  Code from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Code x) const;
  std::uint32_t coeff(Code x, std::uint32_t k) const;
  /// alpha^k for k < m.
  Code basis(std::uint32_t k) const;

  Code add(Code x, Code y) const;
  Code sub(Code x, Code y) const;
  Code neg(Code x) const;
  Code mul(Code x, Code y) const;
  Code inv(Code x) const;  // DivisionByZero on 0
  Code pow(Code x, std::uint64_t e) const;
  Code pow(Code x, const Exponent& e) const;
  /// x^{p^k}; k is reduced mod m.
  Code frobenius(Code x, std::uint64_t k) const;
  /// Tr_{F_{p^m}/F_p}(x) in {0, ..., p-1}.
  std::uint32_t trace(Code x) const;
  /// Quadratic character in {-1, 0, 1}.
  int eta(Code x) const;

  FFElement element(Code x) const;
  FFElement element_from_prime(std::int64_t c) const;
  std::vector<FFElement> elements() const;

 private:
  FiniteField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
  Code mul_poly(Code x, Code y) const;
  Code pow_poly(Code x, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> place_;         // p^k
  std::vector<std::uint32_t> basis_trace_;   // Tr(alpha^k)
  // log/antilog over a primitive element, present when q is small enough
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

/// An element together with the field it lives in. Operations on elements of different
/// FiniteField instances throw FieldMismatch.
class FFElement {
 public:
  using Code = FiniteField::Code;

  FFElement(FieldPtr field, Code code);

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FFElement operator+(const FFElement& o) const;
  FFElement operator-(const FFElement& o) const;
  FFElement operator-() const;
  FFElement operator*(const FFElement& o) const;
  FFElement inv() const;
  FFElement pow(const Exponent& e) const;
  FFElement frobenius(std::uint64_t k) const;
  std::uint32_t trace() const { return field_->trace(code_); }
  int eta() const { return field_->eta(code_); }

  bool operator==(const FFElement& o) const;
  std::string to_string() const;

 private:
  void check_same(const FFElement& o) const;

  FieldPtr field_;
  Code code_;
};

std::ostream& operator<<(std::ostream& os, const FFElement& x);

namespace poly {
// Dense polynomials over F_p, lowest degree first, no trailing zeros (zero = empty).
using Poly = std::vector<std::uint32_t>;
void trim(Poly& f);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
Poly rem(Poly a, const Poly& f, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// Ben-Or test: f (monic, degree m) is irreducible iff gcd(f, X^{p^d} - X) = 1 for d <= m/2.
bool is_irreducible(const Poly& f, std::uint32_t p);
}  // namespace poly

/// The F_p-linear map on the coefficient vectors of one field.
class LinOperator {
 public:
  LinOperator(FieldPtr field, std::vector<std::uint32_t> matrix);

  /// X -> a^{p^u} X^{p^{2u}} + a X.
  static LinOperator linearized(const FFElement& a, std::uint64_t u);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return field_->m(); }
  /// Row-major m x m; column j is the image of alpha^j.
  const std::vector<std::uint32_t>& matrix() const noexcept { return matrix_; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return matrix_[row * dim() + col]; }

  FiniteField::Code apply(FiniteField::Code x) const;
  FFElement apply(const FFElement& x) const;
  std::uint32_t rank() const;
  std::uint32_t kernel_dimension() const { return dim() - rank(); }
  bool invertible() const { return rank() == dim(); }

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> matrix_;
};

/// All solutions of op(X) = rhs: empty, a single point, or particular + span(kernel_basis).
struct SolutionSet {
  enum class Kind { None, Unique, Affine };

  Kind kind = Kind::None;
  std::optional<FFElement> particular;
  std::vector<FFElement> kernel_basis;

  bool solvable() const noexcept { return kind != Kind::None; }
  /// p^{kernel dim} when solvable, else 0.
  std::uint64_t size() const;
  bool contains(const FFElement& x) const;
  std::vector<FFElement> enumerate() const;
};

/// Row reduction over F_p. Free variables of the particular solution are set to zero.
SolutionSet solve_linear(const LinOperator& op, const FFElement& rhs);

}  // namespace weilcodes
