#include "weilcodes/gf.hpp"

#include "weilcodes/arith.hpp"
#include "weilcodes/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace weilcodes {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  return a->p() == b->p() && a->m() == b->m() && a->modulus() == b->modulus();
}

}  // namespace

// ---------------------------------------------------------------------------
// polynomials over F_p

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly rem(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = arith::inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return rem(std::move(r), f, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = arith::inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t m = g.size() - 1;
  if (m == 1) return true;
  const Poly x{0, 1};
  Poly xp = x;  // X^{p^d} mod f
  for (std::size_t d = 1; d <= m / 2; ++d) {
    Poly acc{1};
    Poly base = xp;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) acc = mulmod(acc, base, g, p);
      base = mulmod(base, base, g, p);
    }
    xp = acc;
    Poly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (gcd(g, diff, p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// FiniteField

FieldPtr FiniteField::create(std::uint32_t p, std::uint32_t m,
                             std::optional<std::vector<std::uint32_t>> modulus) {
  if (p == 2 || !arith::is_prime(p)) throw CompositeP("p = " + std::to_string(p) + " is not an odd prime");
  if (m == 0) throw Error("extension degree must be positive");
  long double size = 1;
  for (std::uint32_t i = 0; i < m; ++i) size *= p;
  if (size > 4.0e9L) throw Error("field too large for packed element codes");

  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1)
      throw Error("modulus must be monic of degree " + std::to_string(m));
    for (auto c : mod)
      if (c >= p) throw Error("modulus coefficients must lie in [0, p)");
    if (!poly::is_irreducible(mod, p)) throw ReducibleModulus("supplied modulus is reducible over F_" + std::to_string(p));
  } else if (m == 1) {
    mod = {0, 1};
  } else {
    // tails ordered with c_0 most significant
    std::vector<std::uint32_t> tail(m, 0);
    for (;;) {
      mod = tail;
      mod.push_back(1);
      if (poly::is_irreducible(mod, p)) break;
      std::size_t k = m;
      while (k > 0 && ++tail[k - 1] == p) tail[--k] = 0;
      if (k == 0) throw Error("no irreducible polynomial found");  // unreachable
    }
  }
  auto field = std::shared_ptr<FiniteField>(new FiniteField(p, m, std::move(mod)));
  field->build_tables();
  return field;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m; ++i) {
    place_.push_back(q_);
    q_ *= p;
  }
}

void FiniteField::build_tables() {
  basis_trace_.assign(m_, 0);
  for (std::uint32_t k = 0; k < m_; ++k) {
    Code x = place_[k];
    Code acc = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      acc = add(acc, x);
      x = pow_poly(x, p_);
    }
    basis_trace_[k] = coeff(acc, 0);
  }
  if (q_ > kTableLimit) return;

  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  Code g = 0;
  for (Code cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : factors)
      if (pow_poly(cand, n / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.resize(2 * n);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_poly(x, g);
  }
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (m_ > 1) {
    os << "^" << m_ << " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (!modulus_[i]) continue;
      if (!first) os << " + ";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i >= 1) os << "X";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

FiniteField::Code FiniteField::from_prime(std::int64_t c) const { return static_cast<Code>(arith::mod(c, p_)); }

FiniteField::Code FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > m_) throw Error("too many coefficients for " + describe());
  Code x = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) x += static_cast<Code>((coeffs[k] % p_) * place_[k]);
  return x;
}

std::vector<std::uint32_t> FiniteField::coeffs(Code x) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t k = 0; k < m_; ++k) {
    out[k] = x % p_;
    x /= p_;
  }
  return out;
}

std::uint32_t FiniteField::coeff(Code x, std::uint32_t k) const {
  return static_cast<std::uint32_t>(x / place_[k] % p_);
}

FiniteField::Code FiniteField::basis(std::uint32_t k) const { return static_cast<Code>(place_.at(k)); }

FiniteField::Code FiniteField::add(Code x, Code y) const {
  Code r = 0;
  for (std::uint32_t k = 0; k < m_; ++k) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    r += static_cast<Code>(d * place_[k]);
    x /= p_;
    y /= p_;
  }
  return r;
}

FiniteField::Code FiniteField::neg(Code x) const {
  Code r = 0;
  for (std::uint32_t k = 0; k < m_; ++k) {
    const std::uint32_t d = x % p_;
    if (d) r += static_cast<Code>((p_ - d) * place_[k]);
    x /= p_;
  }
  return r;
}

FiniteField::Code FiniteField::sub(Code x, Code y) const { return add(x, neg(y)); }

FiniteField::Code FiniteField::mul_poly(Code x, Code y) const {
  auto a = coeffs(x);
  auto b = coeffs(y);
  poly::trim(a);
  poly::trim(b);
  auto r = poly::mulmod(a, b, modulus_, p_);
  return from_coeffs(r);
}

FiniteField::Code FiniteField::pow_poly(Code x, std::uint64_t e) const {
  Code r = 1;
  while (e) {
    if (e & 1) r = mul_poly(r, x);
    x = mul_poly(x, x);
    e >>= 1;
  }
  return r;
}

FiniteField::Code FiniteField::mul(Code x, Code y) const {
  if (x == 0 || y == 0) return 0;
  if (!log_.empty()) return exp_[std::uint64_t{log_[x]} + log_[y]];
  return mul_poly(x, y);
}

FiniteField::Code FiniteField::inv(Code x) const {
  if (x == 0) throw DivisionByZero("inverse of zero in " + describe());
  if (!log_.empty()) return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
  return pow_poly(x, q_ - 2);
}

FiniteField::Code FiniteField::pow(Code x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  e %= q_ - 1;
  if (!log_.empty()) return exp_[static_cast<std::uint64_t>((unsigned __int128)log_[x] * e % (q_ - 1))];
  return pow_poly(x, e);
}

FiniteField::Code FiniteField::pow(Code x, const Exponent& e) const {
  if (e < 0) throw Error("negative exponent");
  if (e == 0) return 1;
  if (x == 0) return 0;
  const Exponent r = e % (q_ - 1);
  return pow(x, r.convert_to<std::uint64_t>());
}

FiniteField::Code FiniteField::frobenius(Code x, std::uint64_t k) const {
  k %= m_;
  Code r = x;
  for (std::uint64_t i = 0; i < k; ++i) r = pow(r, std::uint64_t{p_});
  return r;
}

std::uint32_t FiniteField::trace(Code x) const {
  std::uint64_t t = 0;
  for (std::uint32_t k = 0; k < m_; ++k) {
    t += std::uint64_t{x % p_} * basis_trace_[k];
    x /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

int FiniteField::eta(Code x) const {
  if (x == 0) return 0;
  if (!log_.empty()) return (log_[x] & 1) ? -1 : 1;
  return pow(x, (q_ - 1) / 2) == 1 ? 1 : -1;
}

FFElement FiniteField::element(Code x) const {
  if (x >= q_) throw Error("element code out of range");
  return FFElement(shared_from_this(), x);
}

FFElement FiniteField::element_from_prime(std::int64_t c) const { return element(from_prime(c)); }

std::vector<FFElement> FiniteField::elements() const {
  std::vector<FFElement> out;
  out.reserve(q_);
  for (Code x = 0; x < q_; ++x) out.push_back(element(x));
  return out;
}

// ---------------------------------------------------------------------------
// FFElement

FFElement::FFElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {}

void FFElement::check_same(const FFElement& o) const {
  if (!same_field(field_, o.field_))
    throw FieldMismatch("operands live in " + field_->describe() + " and " + o.field_->describe());
}

FFElement FFElement::operator+(const FFElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}

FFElement FFElement::operator-(const FFElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}

FFElement FFElement::operator-() const { return {field_, field_->neg(code_)}; }

FFElement FFElement::operator*(const FFElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}

FFElement FFElement::inv() const { return {field_, field_->inv(code_)}; }
FFElement FFElement::pow(const Exponent& e) const { return {field_, field_->pow(code_, e)}; }
FFElement FFElement::frobenius(std::uint64_t k) const { return {field_, field_->frobenius(code_, k)}; }

bool FFElement::operator==(const FFElement& o) const { return same_field(field_, o.field_) && code_ == o.code_; }

std::string FFElement::to_string() const {
  std::ostringstream os;
  os << '(';
  const auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FFElement& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// linear algebra over F_p

namespace {

struct Reduced {
  std::vector<std::uint32_t> rows;  // r x cols, row-major
  std::vector<std::uint32_t> pivot_cols;
};

// Reduced row echelon form of an n x cols matrix.
Reduced rref(std::vector<std::uint32_t> a, std::uint32_t n, std::uint32_t cols, std::uint32_t p,
             std::uint32_t pivot_limit) {
  Reduced out;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < pivot_limit && row < n; ++col) {
    std::uint32_t piv = row;
    while (piv < n && a[piv * cols + col] == 0) ++piv;
    if (piv == n) continue;
    for (std::uint32_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[row * cols + j]);
    const std::uint64_t inv = arith::inv_mod(a[row * cols + col], p);
    for (std::uint32_t j = 0; j < cols; ++j) a[row * cols + j] = static_cast<std::uint32_t>(a[row * cols + j] * inv % p);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == row || a[r * cols + col] == 0) continue;
      const std::uint64_t f = a[r * cols + col];
      for (std::uint32_t j = 0; j < cols; ++j)
        a[r * cols + j] = static_cast<std::uint32_t>((a[r * cols + j] + (p - f) * a[row * cols + j]) % p);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rows = std::move(a);
  return out;
}

}  // namespace

LinOperator::LinOperator(FieldPtr field, std::vector<std::uint32_t> matrix)
    : field_(std::move(field)), matrix_(std::move(matrix)) {
  if (matrix_.size() != std::size_t{dim()} * dim()) throw Error("operator matrix has the wrong size");
  for (auto& c : matrix_) c %= field_->p();
}

LinOperator LinOperator::linearized(const FFElement& a, std::uint64_t u) {
  const auto& f = a.field();
  const std::uint32_t m = f->m();
  const auto apu = f->frobenius(a.code(), u);
  std::vector<std::uint32_t> mat(std::size_t{m} * m);
  for (std::uint32_t j = 0; j < m; ++j) {
    const auto x = f->basis(j);
    const auto img = f->add(f->mul(apu, f->frobenius(x, 2 * u)), f->mul(a.code(), x));
    for (std::uint32_t i = 0; i < m; ++i) mat[i * m + j] = f->coeff(img, i);
  }
  return LinOperator(f, std::move(mat));
}

FiniteField::Code LinOperator::apply(FiniteField::Code x) const {
  const std::uint32_t m = dim(), p = field_->p();
  const auto v = field_->coeffs(x);
  std::vector<std::uint32_t> out(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < m; ++j) acc += std::uint64_t{matrix_[i * m + j]} * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p);
  }
  return field_->from_coeffs(out);
}

FFElement LinOperator::apply(const FFElement& x) const {
  if (!same_field(field_, x.field())) throw FieldMismatch("operator and argument live in different fields");
  return FFElement(field_, apply(x.code()));
}

std::uint32_t LinOperator::rank() const {
  return static_cast<std::uint32_t>(rref(matrix_, dim(), dim(), field_->p(), dim()).pivot_cols.size());
}

std::uint64_t SolutionSet::size() const {
  if (!solvable()) return 0;
  const auto p = particular->field()->p();
  return static_cast<std::uint64_t>(arith::ipow(p, kernel_basis.size()));
}

bool SolutionSet::contains(const FFElement& x) const {
  if (!solvable()) return false;
  const auto& f = particular->field();
  const std::uint32_t m = f->m();
  const std::uint32_t k = static_cast<std::uint32_t>(kernel_basis.size());
  // is x - particular in span(kernel_basis)?
  const std::uint32_t cols = k + 1;
  std::vector<std::uint32_t> a(std::size_t{m} * cols);
  const auto diff = f->coeffs(f->sub(x.code(), particular->code()));
  for (std::uint32_t j = 0; j < k; ++j) {
    const auto c = kernel_basis[j].coeffs();
    for (std::uint32_t i = 0; i < m; ++i) a[i * cols + j] = c[i];
  }
  for (std::uint32_t i = 0; i < m; ++i) a[i * cols + k] = diff[i];
  const auto red = rref(std::move(a), m, cols, f->p(), cols);
  return std::find(red.pivot_cols.begin(), red.pivot_cols.end(), k) == red.pivot_cols.end();
}

std::vector<FFElement> SolutionSet::enumerate() const {
  std::vector<FFElement> out;
  if (!solvable()) return out;
  const auto& f = particular->field();
  const std::uint32_t p = f->p();
  std::vector<std::uint32_t> digits(kernel_basis.size(), 0);
  for (;;) {
    auto x = particular->code();
    for (std::size_t j = 0; j < digits.size(); ++j)
      for (std::uint32_t t = 0; t < digits[j]; ++t) x = f->add(x, kernel_basis[j].code());
    out.emplace_back(f, x);
    std::size_t j = 0;
    while (j < digits.size() && ++digits[j] == p) digits[j++] = 0;
    if (j == digits.size()) break;
  }
  return out;
}

SolutionSet solve_linear(const LinOperator& op, const FFElement& rhs) {
  const auto& f = op.field();
  if (!same_field(f, rhs.field())) throw FieldMismatch("operator and right-hand side live in different fields");
  const std::uint32_t m = op.dim(), p = f->p(), cols = m + 1;
  std::vector<std::uint32_t> a(std::size_t{m} * cols);
  const auto b = rhs.coeffs();
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) a[i * cols + j] = op.at(i, j);
    a[i * cols + m] = b[i];
  }
  const auto red = rref(std::move(a), m, cols, p, m);
  const auto rank = static_cast<std::uint32_t>(red.pivot_cols.size());

  SolutionSet out;
  for (std::uint32_t r = rank; r < m; ++r)
    if (red.rows[r * cols + m] != 0) return out;

  std::vector<std::uint32_t> x(m, 0);
  for (std::uint32_t r = 0; r < rank; ++r) x[red.pivot_cols[r]] = red.rows[r * cols + m];
  out.particular = FFElement(f, f->from_coeffs(x));

  std::vector<bool> is_pivot(m, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  for (std::uint32_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> k(m, 0);
    k[free] = 1;
    for (std::uint32_t r = 0; r < rank; ++r) k[red.pivot_cols[r]] = (p - red.rows[r * cols + free]) % p;
    out.kernel_basis.emplace_back(f, f->from_coeffs(k));
  }
  out.kind = out.kernel_basis.empty() ? SolutionSet::Kind::Unique : SolutionSet::Kind::Affine;
  return out;
}

}  // namespace weilcodes
