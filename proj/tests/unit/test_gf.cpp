#include <doctest.h>

#include "weilcodes/errors.hpp"
#include "weilcodes/gf.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace weilcodes;

namespace {

// p^k by repeated multiplication, for brute-force checks
FiniteField::Code slow_pow(const FiniteField& f, FiniteField::Code x, std::uint64_t e) {
  FiniteField::Code r = f.one();
  for (std::uint64_t i = 0; i < e; ++i) r = f.mul(r, x);
  return r;
}

void check_axioms(const FieldPtr& f, std::uint32_t samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, f->order() - 1);
  for (std::uint32_t i = 0; i < samples; ++i) {
    const auto x = static_cast<FiniteField::Code>(pick(rng));
    const auto y = static_cast<FiniteField::Code>(pick(rng));
    const auto z = static_cast<FiniteField::Code>(pick(rng));
    CHECK(f->mul(x, f->mul(y, z)) == f->mul(f->mul(x, y), z));
    CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
    CHECK(f->mul(x, y) == f->mul(y, x));
    CHECK(f->add(x, f->neg(x)) == f->zero());
    CHECK(f->sub(x, y) == f->add(x, f->neg(y)));
    if (x != 0) {
      CHECK(f->mul(x, f->inv(x)) == f->one());
      CHECK(f->pow(x, f->order() - 1) == f->one());
    }
    CHECK(f->trace(f->add(x, y)) == (f->trace(x) + f->trace(y)) % f->p());
    CHECK(f->trace(f->frobenius(x, 1)) == f->trace(x));
  }
}

}  // namespace

TEST_CASE("default moduli are the smallest irreducibles") {
  CHECK(FiniteField::create(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FiniteField::create(3, 3)->modulus() == std::vector<std::uint32_t>{1, 0, 2, 1});
  CHECK(FiniteField::create(5, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(FiniteField::create(3, 1)->modulus() == std::vector<std::uint32_t>{0, 1});

  // brute force: every monic of degree 2 and 3 over F_3 that has no root and no smaller candidate
  for (std::uint32_t m : {2u, 3u}) {
    const auto chosen = FiniteField::create(3, m)->modulus();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= 3;
    for (std::uint64_t c = 0; c < count; ++c) {
      poly::Poly f(m + 1, 0);
      // c0 most significant in the enumeration order
      auto rest = c;
      for (std::uint32_t i = m; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(rest % 3);
        rest /= 3;
      }
      f[m] = 1;
      bool root = false;
      for (std::uint32_t x = 0; x < 3; ++x) {
        std::uint32_t v = 0;
        for (std::uint32_t i = m + 1; i-- > 0;) v = (v * x + f[i]) % 3;
        root = root || v == 0;
      }
      if (!root) {
        CHECK(f == chosen);
        break;
      }
    }
  }
}

TEST_CASE("field axioms on table and polynomial backends") {
  check_axioms(FiniteField::create(3, 4), 400, 1);
  check_axioms(FiniteField::create(5, 3), 400, 2);
  check_axioms(FiniteField::create(7, 2), 400, 3);
  check_axioms(FiniteField::create(3, 15), 200, 4);  // beyond the log-table limit
  check_axioms(FiniteField::create(13, 6), 100, 5);
}

TEST_CASE("custom modulus gives an isomorphic field") {
  const auto f = FiniteField::create(3, 2, std::vector<std::uint32_t>{2, 1, 1});  // X^2 + X + 2
  CHECK(f->modulus() == std::vector<std::uint32_t>{2, 1, 1});
  check_axioms(f, 200, 6);
  std::uint32_t squares = 0;
  for (FiniteField::Code x = 1; x < 9; ++x) squares += f->eta(x) == 1;
  CHECK(squares == 4);
}

TEST_CASE("trace is balanced and Tr(1) = m") {
  for (auto [p, m] : {std::pair{3u, 3u}, {5u, 2u}, {3u, 4u}}) {
    const auto f = FiniteField::create(p, m);
    CHECK(f->trace(f->one()) == m % p);
    std::vector<std::uint64_t> hist(p, 0);
    for (FiniteField::Code x = 0; x < f->order(); ++x) ++hist[f->trace(x)];
    for (auto h : hist) CHECK(h == f->order() / p);
  }
}

TEST_CASE("eta matches the set of squares") {
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 1u}, {3u, 3u}}) {
    const auto f = FiniteField::create(p, m);
    std::set<FiniteField::Code> squares;
    for (FiniteField::Code x = 1; x < f->order(); ++x) squares.insert(f->mul(x, x));
    CHECK(squares.size() == (f->order() - 1) / 2);
    CHECK(f->eta(0) == 0);
    for (FiniteField::Code x = 1; x < f->order(); ++x) {
      CHECK(f->eta(x) == (squares.count(x) ? 1 : -1));
      for (FiniteField::Code y = 1; y < f->order(); y += 3) CHECK(f->eta(f->mul(x, y)) == f->eta(x) * f->eta(y));
    }
  }
}

TEST_CASE("frobenius is x^(p^k)") {
  const auto f = FiniteField::create(3, 4);
  for (FiniteField::Code x = 0; x < f->order(); x += 7)
    for (std::uint32_t k = 0; k < 6; ++k) {
      std::uint64_t e = 1;
      for (std::uint32_t i = 0; i < k % 4; ++i) e *= 3;
      CHECK(f->frobenius(x, k) == slow_pow(*f, x, e));
    }
}

TEST_CASE("big exponents") {
  const auto f = FiniteField::create(5, 3);
  const Exponent big = Exponent(124) * boost::multiprecision::pow(Exponent(10), 30) + 1;
  for (FiniteField::Code x = 1; x < f->order(); x += 11) CHECK(f->pow(x, big) == x);
  const auto e = f->element(17);
  CHECK(e.pow(Exponent(0)) == f->element(1));
}

TEST_CASE("prime field embedding and coefficients") {
  const auto f = FiniteField::create(5, 3);
  CHECK(f->from_prime(-1) == 4);
  CHECK(f->from_prime(12) == 2);
  const auto x = f->from_coeffs(std::vector<std::uint32_t>{1, 2, 3});
  CHECK(f->coeffs(x) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(f->coeff(x, 2) == 3);
  CHECK(f->basis(1) == 5);
  CHECK(f->element(x).to_string() == "(1,2,3)");
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(FiniteField::create(9, 1), CompositeP);
  CHECK_THROWS_AS(FiniteField::create(1, 1), CompositeP);
  CHECK_THROWS_AS(FiniteField::create(3, 2, std::vector<std::uint32_t>{2, 0, 1}), ReducibleModulus);  // X^2 - 1
  CHECK_THROWS_AS(FiniteField::create(3, 2, std::vector<std::uint32_t>{0, 2, 1}), ReducibleModulus);  // X(X + 2)
  CHECK_THROWS_AS(FiniteField::create(3, 2, std::vector<std::uint32_t>{1, 0, 2}), Error);  // not monic
  CHECK_THROWS_AS(FiniteField::create(2, 3), CompositeP);
  const auto f = FiniteField::create(3, 2);
  const auto g = FiniteField::create(3, 2, std::vector<std::uint32_t>{2, 1, 1});
  CHECK_THROWS_AS(f->inv(0), DivisionByZero);
  CHECK_THROWS_AS(f->element(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(f->element(1) + g->element(1), FieldMismatch);
  // same parameters and modulus count as the same field
  CHECK(f->element(3) + FiniteField::create(3, 2)->element(4) == f->element(f->add(3, 4)));
}

TEST_CASE("linearized operator matches its formula") {
  const auto f = FiniteField::create(3, 4);
  for (std::uint64_t u = 1; u <= 3; ++u)
    for (FiniteField::Code a = 1; a < f->order(); a += 9) {
      const auto A = f->element(a);
      const auto op = LinOperator::linearized(A, u);
      for (FiniteField::Code x = 0; x < f->order(); x += 5) {
        const auto X = f->element(x);
        CHECK(op.apply(X) == A.frobenius(u) * X.frobenius(2 * u) + A * X);
      }
    }
}

TEST_CASE("solve_linear agrees with exhaustive search") {
  std::mt19937 rng(11);
  for (auto [p, m] : {std::pair{3u, 4u}, {5u, 2u}, {3u, 2u}}) {
    const auto f = FiniteField::create(p, m);
    std::uniform_int_distribution<FiniteField::Code> pick(1, static_cast<FiniteField::Code>(f->order() - 1));
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = f->element(pick(rng));
      const std::uint64_t u = 1 + trial % 3;
      const auto op = LinOperator::linearized(a, u);
      const auto rhs = f->element(pick(rng) * (trial % 4 != 0));
      std::set<FiniteField::Code> brute;
      for (FiniteField::Code x = 0; x < f->order(); ++x)
        if (op.apply(x) == rhs.code()) brute.insert(x);
      const auto sol = solve_linear(op, rhs);
      CHECK(sol.size() == brute.size());
      CHECK(sol.solvable() == !brute.empty());
      std::set<FiniteField::Code> got;
      for (const auto& x : sol.enumerate()) got.insert(x.code());
      CHECK(got == brute);
      for (auto x : brute) CHECK(sol.contains(f->element(x)));
      if (sol.solvable()) CHECK(brute.size() == std::uint64_t(std::pow(p, op.kernel_dimension())));
    }
  }
}
