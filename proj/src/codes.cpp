#include "weilcodes/codes.hpp"

#include "weilcodes/arith.hpp"
#include "weilcodes/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace weilcodes {

std::string to_string(M2Class c) {
  switch (c) {
    case M2Class::Odd: return "odd";
    case M2Class::TwoMod4: return "2 mod 4";
    case M2Class::ZeroMod4: return "0 mod 4";
  }
  return "?";
}

CodeSpec CodeSpec::make(std::uint32_t p, std::uint32_t m1, std::uint32_t m2, std::uint32_t u, std::int64_t lambda,
                        bool punctured) {
  if (p == 2 || !arith::is_prime(p)) throw CompositeP("p = " + std::to_string(p) + " is not an odd prime");
  if (m1 == 0 || m2 == 0 || u == 0) throw Error("m1, m2 and u must be positive");
  CodeSpec s;
  s.p = p;
  s.m1 = m1;
  s.m2 = m2;
  s.u = u;
  s.lambda = static_cast<std::uint32_t>(arith::mod(lambda, p));
  s.punctured = punctured;
  return s;
}

std::uint32_t CodeSpec::v() const noexcept { return std::gcd(m2, u); }

M2Class CodeSpec::m2_class() const noexcept {
  const auto c = m2_over_v();
  if (c % 2) return M2Class::Odd;
  return c % 4 == 2 ? M2Class::TwoMod4 : M2Class::ZeroMod4;
}

CodeSpec CodeSpec::full() const {
  CodeSpec s = *this;
  s.punctured = false;
  return s;
}

std::string CodeSpec::label() const {
  return "p=" + std::to_string(p) + " m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
         " u=" + std::to_string(u) + " lambda=" + std::to_string(lambda) + (punctured ? " punctured" : "");
}

DefiningSet DefiningSet::from_points(const CodeSpec& spec, FieldPtr f1, FieldPtr f2,
                                     std::vector<std::pair<FiniteField::Code, FiniteField::Code>> points) {
  DefiningSet ds;
  ds.spec = spec;
  ds.f1 = std::move(f1);
  ds.f2 = std::move(f2);
  ds.points = std::move(points);
  return ds;
}

namespace {

std::uint64_t reversed_digits(const FiniteField& f, FiniteField::Code x) {
  std::uint64_t r = 0;
  for (std::uint32_t k = 0; k < f.m(); ++k) {
    r = r * f.p() + x % f.p();
    x /= f.p();
  }
  return r;
}

}  // namespace

std::uint64_t point_key(const FiniteField& f1, const FiniteField& f2, FiniteField::Code x, FiniteField::Code y) {
  return reversed_digits(f1, x) * f2.order() + reversed_digits(f2, y);
}

DefiningSet build_defining_set(const CodeSpec& spec) {
  return build_defining_set(spec, FiniteField::create(spec.p, spec.m1), FiniteField::create(spec.p, spec.m2));
}

DefiningSet build_defining_set(const CodeSpec& spec, FieldPtr f1, FieldPtr f2) {
  if (f1->p() != spec.p || f2->p() != spec.p || f1->m() != spec.m1 || f2->m() != spec.m2)
    throw FieldMismatch("fields do not match the spec");
  const auto q1 = f1->order(), q2 = f2->order();
  const std::uint32_t p = spec.p;

  std::vector<std::uint32_t> qx(q1), qy(q2);
  for (FiniteField::Code x = 0; x < q1; ++x) qx[x] = f1->trace(f1->mul(x, x));
  for (FiniteField::Code y = 0; y < q2; ++y) qy[y] = f2->trace(f2->mul(f2->frobenius(y, spec.u), y));

  std::vector<std::pair<std::uint64_t, std::pair<FiniteField::Code, FiniteField::Code>>> keyed;
  for (FiniteField::Code x = 0; x < q1; ++x)
    for (FiniteField::Code y = 0; y < q2; ++y) {
      if (x == 0 && y == 0) continue;
      if ((qx[x] + qy[y]) % p != spec.lambda) continue;
      keyed.push_back({point_key(*f1, *f2, x, y), {x, y}});
    }
  std::sort(keyed.begin(), keyed.end());

  DefiningSet ds;
  ds.spec = spec;
  ds.f1 = f1;
  ds.f2 = f2;
  if (!spec.punctured) {
    ds.points.reserve(keyed.size());
    for (auto& [k, pt] : keyed) ds.points.push_back(pt);
    return ds;
  }

  // keep the smallest member of each scaling orbit
  std::vector<std::int64_t> scalars;
  if (spec.lambda == 0)
    for (std::uint32_t c = 2; c < p; ++c) scalars.push_back(c);
  else
    scalars.push_back(-1);
  for (auto& [k, pt] : keyed) {
    bool smallest = true;
    for (auto c : scalars) {
      const auto x = f1->mul(f1->from_prime(c), pt.first);
      const auto y = f2->mul(f2->from_prime(c), pt.second);
      if (point_key(*f1, *f2, x, y) < k) {
        smallest = false;
        break;
      }
    }
    if (smallest) ds.points.push_back(pt);
  }
  return ds;
}

std::vector<std::uint32_t> encode(const DefiningSet& ds, const FFElement& a, const FFElement& b) {
  auto same = [](const FieldPtr& x, const FieldPtr& y) {
    return x == y || (x->p() == y->p() && x->modulus() == y->modulus());
  };
  if (!same(a.field(), ds.f1) || !same(b.field(), ds.f2))
    throw FieldMismatch("a must lie in F_{p^m1} and b in F_{p^m2} of the defining set");
  const auto& f1 = *ds.f1;
  const auto& f2 = *ds.f2;
  std::vector<std::uint32_t> word(ds.length());
  for (std::size_t j = 0; j < ds.length(); ++j) {
    const auto [x, y] = ds.points[j];
    word[j] = (f1.trace(f1.mul(a.code(), x)) + f2.trace(f2.mul(b.code(), y))) % ds.spec.p;
  }
  return word;
}

Composition composition_of(std::span<const std::uint32_t> word, std::uint32_t p) {
  Composition c(p, 0);
  for (auto s : word) ++c[s];
  return c;
}

WeightEnumerator project(const CompleteWeightEnumerator& cwe) {
  WeightEnumerator we;
  for (const auto& [comp, freq] : cwe) {
    const std::uint64_t n = std::accumulate(comp.begin(), comp.end(), std::uint64_t{0});
    we[n - comp[0]] += freq;
  }
  return we;
}

std::uint64_t total(const WeightEnumerator& we) {
  std::uint64_t t = 0;
  for (const auto& [w, f] : we) t += f;
  return t;
}

std::uint64_t total(const CompleteWeightEnumerator& cwe) {
  std::uint64_t t = 0;
  for (const auto& [c, f] : cwe) t += f;
  return t;
}

std::uint64_t enumeration_cost(const DefiningSet& ds) {
  try {
    return static_cast<std::uint64_t>(arith::ipow(ds.spec.p, ds.spec.m1 + ds.spec.m2));
  } catch (const std::overflow_error&) {
    return UINT64_MAX;
  }
}

void for_each_codeword(
    const DefiningSet& ds, std::uint64_t budget,
    const std::function<void(FiniteField::Code, FiniteField::Code, std::span<const std::uint32_t>)>& visit) {
  const auto cost = enumeration_cost(ds);
  if (cost > budget) throw BudgetExceeded(cost, budget);

  const auto& f1 = *ds.f1;
  const auto& f2 = *ds.f2;
  const std::uint32_t p = ds.spec.p, m1 = f1.m(), K = f1.m() + f2.m();
  const std::size_t n = ds.length();

  // row k: the word of the k-th message basis vector (alpha^k, 0) or (0, beta^{k-m1})
  std::vector<std::vector<std::uint32_t>> rows(K, std::vector<std::uint32_t>(n));
  for (std::uint32_t k = 0; k < K; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const auto [x, y] = ds.points[j];
      rows[k][j] = k < m1 ? f1.trace(f1.mul(f1.basis(k), x)) : f2.trace(f2.mul(f2.basis(k - m1), y));
    }

  std::vector<std::uint32_t> word(n, 0), digits(K, 0);
  FiniteField::Code a = 0, b = 0;
  std::vector<std::uint64_t> place(K);
  for (std::uint32_t k = 0; k < K; ++k) place[k] = arith::ipow(p, k < m1 ? k : k - m1);
  for (;;) {
    visit(a, b, word);
    // odometer step: each digit that moves adds its row once (a wrap adds the p-th copy)
    std::uint32_t k = 0;
    for (; k < K; ++k) {
      const auto& row = rows[k];
      for (std::size_t j = 0; j < n; ++j) {
        auto s = word[j] + row[j];
        word[j] = s >= p ? s - p : s;
      }
      auto& code = k < m1 ? a : b;
      if (++digits[k] < p) {
        code += static_cast<FiniteField::Code>(place[k]);
        break;
      }
      digits[k] = 0;
      code -= static_cast<FiniteField::Code>((p - 1) * place[k]);
    }
    if (k == K) break;
  }
}

Enumeration complete_weight_enumerator(const DefiningSet& ds, std::uint64_t budget) {
  Enumeration out;
  out.length = ds.length();
  const std::uint32_t p = ds.spec.p;
  for_each_codeword(ds, budget, [&](auto, auto, std::span<const std::uint32_t> word) {
    auto comp = composition_of(word, p);
    if (comp[0] == word.size()) ++out.zero_codewords;
    ++out.cwe[std::move(comp)];
  });
  out.we = project(out.cwe);
  std::uint32_t log = 0;
  for (std::uint64_t z = out.zero_codewords; z > 1; z /= p) ++log;
  out.dimension = ds.spec.K() - log;
  return out;
}

std::uint32_t verify_dimension(const DefiningSet& ds, std::uint64_t budget) {
  return complete_weight_enumerator(ds, budget).dimension;
}

void dump_codewords(const DefiningSet& ds, std::ostream& os, std::uint64_t budget) {
  const std::uint32_t p = ds.spec.p;
  const bool wide = p > 10;
  auto digits = [&](const std::vector<std::uint32_t>& v, std::ostream& o) {
    for (std::size_t i = 0; i < v.size(); ++i) o << (wide && i ? "," : "") << v[i];
  };
  for_each_codeword(ds, budget, [&](FiniteField::Code a, FiniteField::Code b, std::span<const std::uint32_t> word) {
    digits(ds.f1->coeffs(a), os);
    os << ' ';
    digits(ds.f2->coeffs(b), os);
    os << " : ";
    digits(std::vector<std::uint32_t>(word.begin(), word.end()), os);
    os << '\n';
  });
}

}  // namespace weilcodes
