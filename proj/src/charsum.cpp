#include "weilcodes/charsum.hpp"

#include "weilcodes/arith.hpp"
#include "weilcodes/errors.hpp"

#include <numeric>
#include <sstream>

namespace weilcodes {

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p, 0) {}

CycInt::CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (c_.size() != p_) throw Error("CycInt needs exactly p coefficients");
  canonicalize();
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t n) {
  CycInt r(p);
  r.c_[0] = n;
  return r;
}

CycInt CycInt::zeta_power(std::uint32_t p, std::int64_t e) {
  CycInt r(p);
  r.c_[arith::mod(e, p)] = 1;
  r.canonicalize();
  return r;
}

void CycInt::canonicalize() {
  const std::int64_t top = c_[p_ - 1];
  if (top == 0) return;
  for (auto& c : c_) c = arith::checked_add(c, -top);
}

void CycInt::check(const CycInt& o) const {
  if (p_ != o.p_) throw Error("CycInt operands over different primes");
}

bool CycInt::is_zero() const {
  for (auto c : c_)
    if (c) return false;
  return true;
}

std::optional<std::int64_t> CycInt::to_integer() const {
  for (std::uint32_t i = 1; i < p_; ++i)
    if (c_[i]) return std::nullopt;
  return c_[0];
}

CycInt CycInt::galois(std::int64_t k) const {
  if (arith::mod(k, p_) == 0) throw Error("galois exponent must be prime to p");
  std::vector<std::int64_t> out(p_, 0);
  for (std::uint32_t i = 0; i < p_; ++i) out[arith::mod(std::int64_t{i} * k, p_)] += c_[i];
  return CycInt(p_, std::move(out));
}

std::string CycInt::to_string() const {
  if (auto n = to_integer()) return std::to_string(*n);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < p_; ++i) {
    const auto c = c_[i];
    if (!c) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const auto a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check(o);
  for (std::uint32_t i = 0; i < p_; ++i) c_[i] = arith::checked_add(c_[i], o.c_[i]);
  canonicalize();
  return *this;
}

CycInt CycInt::operator-() const { return *this * -1; }

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(std::int64_t k) const {
  CycInt r = *this;
  for (auto& c : r.c_) c = arith::checked_mul(c, k);
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check(o);
  std::vector<std::int64_t> out(p_, 0);
  for (std::uint32_t i = 0; i < p_; ++i) {
    if (!c_[i]) continue;
    for (std::uint32_t j = 0; j < p_; ++j) {
      if (!o.c_[j]) continue;
      auto& slot = out[(i + j) % p_];
      slot = arith::checked_add(slot, arith::checked_mul(c_[i], o.c_[j]));
    }
  }
  return CycInt(p_, std::move(out));
}

// ---------------------------------------------------------------------------
// GaussScale, closed forms

GaussScale::GaussScale(std::uint32_t p) : p_(p) {
  const std::uint64_t h = (p - 1) / 2;
  sign_exponent_ = static_cast<int>((h * h) % 4);
}

int GaussScale::even_power(std::int64_t e) const {
  if (e % 2 != 0) throw Error("odd power of L requested: L^" + std::to_string(e));
  // L^2 = i^{2 sign} = eta_1(-1)
  const int eta_m1 = sign_exponent_ == 0 ? 1 : -1;
  return (arith::mod(e / 2, 2) == 0) ? 1 : eta_m1;
}

namespace {

CycInt g1_of(std::uint32_t p) {
  std::vector<std::int64_t> c(p, 0);
  for (std::uint32_t x = 1; x < p; ++x) c[x] = arith::legendre(x, p);
  return CycInt(p, std::move(c));
}

std::uint32_t gcd_u(std::uint64_t a, std::uint64_t b) { return static_cast<std::uint32_t>(std::gcd(a, b)); }

// a^{(p^m - 1)/(p^v + 1)} == (-1)^{s/v} in the field; m/v must be even.
bool hits_sign(const FFElement& a, std::uint32_t v) {
  const auto& f = *a.field();
  Exponent num = 1, den = 1;
  for (std::uint32_t i = 0; i < f.m(); ++i) num *= f.p();
  for (std::uint32_t i = 0; i < v; ++i) den *= f.p();
  num -= 1;
  den += 1;
  const auto s = f.m() / 2;
  const auto target = (s / v) % 2 == 0 ? f.one() : f.from_prime(-1);
  return f.pow(a.code(), Exponent(num / den)) == target;
}

void require_same(const FFElement& a, const FFElement& b) {
  if (!(a.field()->p() == b.field()->p() && a.field()->modulus() == b.field()->modulus()))
    throw FieldMismatch("a and b live in different fields");
}

void require_nonzero(const FFElement& a) {
  if (a.is_zero()) throw ZeroA("the coefficient a must be nonzero");
}

}  // namespace

CycInt ClosedForm::expand(std::uint32_t p) const {
  CycInt r = CycInt::zeta_power(p, zeta_exp) * scalar;
  return with_g1 ? r * g1_of(p) : r;
}

CycInt gauss_sum_bruteforce(const FiniteField& field) {
  const std::uint32_t p = field.p();
  std::vector<std::int64_t> c(p, 0);
  for (FiniteField::Code x = 1; x < field.order(); ++x) c[field.trace(x)] += field.eta(x);
  return CycInt(p, std::move(c));
}

ClosedForm gauss_sum_closed_form(std::uint32_t p, std::uint32_t m) {
  ClosedForm out;
  const GaussScale L(p);
  const std::int64_t sign = (m % 2 == 1) ? 1 : -1;  // (-1)^{m-1}
  if (m % 2 == 0) {
    out.scalar = sign * L.even_power(m) * arith::ipow(p, m / 2);
  } else {
    out.scalar = sign * L.even_power(m - 1) * arith::ipow(p, (m - 1) / 2);
    out.with_g1 = true;
  }
  return out;
}

CycInt gauss_sum_closed(std::uint32_t p, std::uint32_t m) { return gauss_sum_closed_form(p, m).expand(p); }

CycInt orthogonality_sum(const FFElement& b) {
  const auto& f = *b.field();
  std::vector<std::int64_t> c(f.p(), 0);
  for (FiniteField::Code x = 0; x < f.order(); ++x) ++c[f.trace(f.mul(b.code(), x))];
  return CycInt(f.p(), std::move(c));
}

CycInt weil_sum_bruteforce(std::uint64_t u, const FFElement& a, const FFElement& b) {
  require_nonzero(a);
  require_same(a, b);
  const auto& f = *a.field();
  std::vector<std::int64_t> c(f.p(), 0);
  for (FiniteField::Code x = 0; x < f.order(); ++x) {
    const auto xq = f.mul(f.frobenius(x, u), x);
    ++c[f.trace(f.add(f.mul(a.code(), xq), f.mul(b.code(), x)))];
  }
  return CycInt(f.p(), std::move(c));
}

ClosedForm weil_sum_closed_form(std::uint64_t u, const FFElement& a, const FFElement& b) {
  require_nonzero(a);
  require_same(a, b);
  const auto& fp = a.field();
  const auto& f = *fp;
  const std::uint32_t m = f.m(), p = f.p();
  const std::uint32_t v = gcd_u(m, u);

  const auto op = LinOperator::linearized(a, u);
  const auto rhs = -b.frobenius(u);
  const auto sol = solve_linear(op, rhs);

  ClosedForm out;
  if (!sol.solvable()) return out;  // zero
  const auto x0 = sol.particular->code();
  const auto t = f.trace(f.neg(f.mul(a.code(), f.mul(f.frobenius(x0, u), x0))));
  out.zeta_exp = t;

  if ((m / v) % 2 == 1) {
    const auto g = gauss_sum_closed_form(p, m);
    out.scalar = g.scalar * f.eta(a.code());
    out.with_g1 = g.with_g1;
    return out;
  }
  const std::uint32_t s = m / 2;
  const std::int64_t sign = ((s / v) % 2 == 0) ? 1 : -1;
  if (!hits_sign(a, v)) {
    out.scalar = sign * arith::ipow(p, s);
  } else {
    out.scalar = -sign * arith::ipow(p, s + v);
  }
  return out;
}

CycInt weil_sum_closed(std::uint64_t u, const FFElement& a, const FFElement& b) {
  return weil_sum_closed_form(u, a, b).expand(a.field()->p());
}

std::optional<FFElement> gamma(std::uint64_t u, const FFElement& b) {
  const auto& f = *b.field();
  const auto op = LinOperator::linearized(f.element(1), u);
  auto sol = solve_linear(op, -b.frobenius(u));
  if (!sol.solvable()) return std::nullopt;
  return sol.particular;
}

CycInt weil_sum_scalar(std::uint64_t u, std::int64_t z1, std::int64_t z2, const FFElement& b) {
  const auto& f = *b.field();
  const std::uint32_t p = f.p(), m = f.m();
  if (arith::mod(z1, p) == 0 || arith::mod(z2, p) == 0) throw ZeroA("z1 and z2 must lie in F_p^*");
  const std::uint32_t v = gcd_u(m, u);
  const std::uint32_t c = m / v;
  const auto g = gamma(u, b);
  if (!g) return CycInt(p);
  const auto gc = g->code();
  const std::int64_t tr = f.trace(f.mul(f.frobenius(gc, u), gc));
  const std::int64_t ratio = arith::mod(z2 * z2, p) * arith::inv_mod(z1, p);
  ClosedForm out;
  out.zeta_exp = static_cast<std::uint32_t>(arith::mod(-ratio * tr, p));
  if (c % 2 == 1) {
    const auto gm = gauss_sum_closed_form(p, m);
    const int eta = (m % 2 == 0) ? 1 : arith::legendre(z1, p);
    out.scalar = gm.scalar * eta;
    out.with_g1 = gm.with_g1;
  } else if (c % 4 == 2) {
    out.scalar = -arith::ipow(p, m / 2);
  } else {
    out.scalar = -arith::ipow(p, m / 2 + v);
  }
  return out.expand(p);
}

CycInt quad_sum_bruteforce(const FFElement& a, const FFElement& b) {
  require_nonzero(a);
  require_same(a, b);
  const auto& f = *a.field();
  std::vector<std::int64_t> c(f.p(), 0);
  for (FiniteField::Code x = 0; x < f.order(); ++x)
    ++c[f.trace(f.add(f.mul(a.code(), f.mul(x, x)), f.mul(b.code(), x)))];
  return CycInt(f.p(), std::move(c));
}

CycInt quad_sum_closed(const FFElement& a, const FFElement& b) {
  require_nonzero(a);
  require_same(a, b);
  const auto& f = *a.field();
  const std::uint32_t p = f.p();
  const auto four_a = f.mul(f.from_prime(4), a.code());
  const auto shift = f.neg(f.mul(f.mul(b.code(), b.code()), f.inv(four_a)));
  auto g = gauss_sum_closed_form(p, f.m());
  g.scalar *= f.eta(a.code());
  g.zeta_exp = f.trace(shift);
  return g.expand(p);
}

bool restricted_power_check(std::int64_t z, const FiniteField& field, std::uint64_t u) {
  const std::uint32_t v = gcd_u(field.m(), u);
  if ((field.m() / v) % 2 != 0) throw OddQuotient("m/v is odd, the exponent is not an integer");
  if (arith::mod(z, field.p()) == 0) throw ZeroA("z must lie in F_p^*");
  Exponent num = 1, den = 1;
  for (std::uint32_t i = 0; i < field.m(); ++i) num *= field.p();
  for (std::uint32_t i = 0; i < v; ++i) den *= field.p();
  return field.pow(field.from_prime(z), Exponent((num - 1) / (den + 1))) == field.one();
}

}  // namespace weilcodes
