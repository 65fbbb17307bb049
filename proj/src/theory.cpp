#include "weilcodes/theory.hpp"

#include "weilcodes/arith.hpp"
#include "weilcodes/charsum.hpp"
#include "weilcodes/errors.hpp"

#include <numeric>

namespace weilcodes {

namespace printed {

std::string name(Flag f) {
  switch (f) {
    case kLengthZeroMod4: return "length-zero-mod-4";
    case kSymbolsN1Sign: return "symbols-n1-sign";
    case kSymbolsN4lSign: return "symbols-n4l-sign";
    case kATildePower: return "a-tilde-power";
    case kT1Offset: return "t1-offset";
    case kT2PuncturedLength: return "t2-punctured-length";
    case kT4Middle: return "t4-middle";
    case kT5FormulaFactor: return "t5-formula-factor";
    case kT5TableFactor: return "t5-table-factor";
    case kT79Row2: return "t7-t9-row2";
    case kDiscSign: return "disc-sign";
    case kT8Frequencies: return "t8-frequencies";
    case kT8Others: return "t8-others";
    case kT10LastTerm: return "t10-last-term";
    case kT11Row2: return "t11-row2";
    case kT11Frequency: return "t11-frequency";
    case kT11AllEqual: return "t11-all-equal";
    case kT11Sqrt: return "t11-sqrt";
  }
  return "unknown";
}

std::vector<Flag> all_flags() {
  std::vector<Flag> out;
  for (std::uint32_t b = 1; b & kAll; b <<= 1) out.push_back(static_cast<Flag>(b));
  return out;
}

}  // namespace printed

namespace {

using printed::Flag;

// Shared constants of one spec. L powers only ever appear with even exponents.
struct Ctx {
  std::int64_t p;
  std::uint32_t m1, m2, K, v;
  M2Class cls;
  std::uint32_t lam;
  GaussScale L;
  std::uint32_t flags;

  Ctx(const CodeSpec& s, std::uint32_t f)
      : p(s.p), m1(s.m1), m2(s.m2), K(s.K()), v(s.v()), cls(s.m2_class()), lam(s.lambda), L(s.p), flags(f) {}

  std::int64_t P(std::int64_t e) const {
    if (e < 0) throw Error("negative power of p");
    return arith::ipow(p, static_cast<std::uint64_t>(e));
  }
  // p^{num/2}
  std::int64_t hp(std::int64_t num) const { return arith::half_pow(p, num); }
  std::int64_t Lp(std::int64_t e) const { return L.even_power(e); }
  int eta(std::int64_t x) const { return arith::legendre(x, static_cast<std::uint32_t>(p)); }
  bool has(Flag f) const { return (flags & f) != 0; }
  bool k_odd() const { return K % 2 == 1; }
  bool m1_odd() const { return m1 % 2 == 1; }
};

}  // namespace

CaseKey CaseKey::of(const CodeSpec& spec) {
  CaseKey k;
  k.lambda_zero = spec.lambda == 0;
  k.m2_class = spec.m2_class();
  k.parity_odd = k.m2_class == M2Class::Odd ? spec.K() % 2 == 1 : spec.m1 % 2 == 1;
  return k;
}

int CaseKey::theorem() const {
  if (lambda_zero) {
    switch (m2_class) {
      case M2Class::Odd: return parity_odd ? 1 : 2;
      case M2Class::TwoMod4: return parity_odd ? 1 : 3;
      case M2Class::ZeroMod4: return parity_odd ? 5 : 4;
    }
  } else {
    switch (m2_class) {
      case M2Class::Odd: return parity_odd ? 6 : 7;
      case M2Class::TwoMod4: return parity_odd ? 8 : 9;
      case M2Class::ZeroMod4: return parity_odd ? 11 : 10;
    }
  }
  throw UnmatchedCase("no theorem covers this parameter set");
}

// ---------------------------------------------------------------------------
// T(a, b)

TTable::TTable(FieldPtr f1, FieldPtr f2, std::uint32_t u) : f1_(std::move(f1)), f2_(std::move(f2)) {
  const auto& F1 = *f1_;
  const auto& F2 = *f2_;
  const auto quarter = F1.inv(F1.from_prime(4));
  a_part_.resize(F1.order());
  for (FiniteField::Code a = 0; a < F1.order(); ++a) a_part_[a] = F1.trace(F1.mul(F1.mul(a, a), quarter));

  const auto op = LinOperator::linearized(F2.element(1), u);
  b_part_.assign(F2.order(), -1);
  for (FiniteField::Code b = 0; b < F2.order(); ++b) {
    const auto sol = solve_linear(op, -F2.element(b).frobenius(u));
    if (!sol.solvable()) continue;
    const auto g = sol.particular->code();
    b_part_[b] = static_cast<std::int32_t>(F2.trace(F2.mul(F2.frobenius(g, u), g)));
  }
}

std::optional<std::uint32_t> TTable::gamma_trace(FiniteField::Code b) const {
  if (b_part_.at(b) < 0) return std::nullopt;
  return static_cast<std::uint32_t>(b_part_[b]);
}

std::optional<std::uint32_t> TTable::T(FiniteField::Code a, FiniteField::Code b) const {
  const auto g = gamma_trace(b);
  if (!g) return std::nullopt;
  return (a_part_.at(a) + *g) % f1_->p();
}

// ---------------------------------------------------------------------------
// lengths

namespace {

std::int64_t full_length(const Ctx& c) {
  const auto base = c.P(c.K - 1);
  if (c.lam == 0) {
    if (c.k_odd()) return base - 1;
    switch (c.cls) {
      case M2Class::Odd: return base + (c.p - 1) * c.Lp(c.K) * c.hp(c.K - 2) - 1;
      case M2Class::TwoMod4: return base + (c.p - 1) * c.Lp(c.m1) * c.hp(c.K - 2) - 1;
      case M2Class::ZeroMod4: return base + (c.p - 1) * c.Lp(c.m1) * c.hp(c.K - 2 + 2 * c.v) - 1;
    }
  }
  const auto E = c.eta(-static_cast<std::int64_t>(c.lam));
  switch (c.cls) {
    case M2Class::Odd:
      return c.k_odd() ? base - E * c.Lp(c.K + 1) * c.hp(c.K - 1) : base - c.Lp(c.K) * c.hp(c.K - 2);
    case M2Class::TwoMod4:
      return c.m1_odd() ? base - E * c.Lp(c.m1 + 1) * c.hp(c.K - 1) : base - c.Lp(c.m1) * c.hp(c.K - 2);
    case M2Class::ZeroMod4:
      // the published case list pairs these two formulas with the opposite parities of m1
      // and omits +v in the odd one; only this assignment matches the defining sets
      if (c.m1_odd())
        return base - E * c.Lp(c.m1 + 1) * c.hp(c.K - 1 + (c.has(printed::kLengthZeroMod4) ? 0 : 2 * c.v));
      return base - c.Lp(c.m1) * c.hp(c.K - 2 + 2 * c.v);
  }
  throw UnmatchedCase("length case");
}

}  // namespace

std::uint64_t predict_length(const CodeSpec& spec, std::uint32_t flags) {
  const Ctx c(spec, flags);
  const auto n = full_length(c);
  if (!spec.punctured) return static_cast<std::uint64_t>(n);
  if (c.has(printed::kT2PuncturedLength) && CaseKey::of(spec).theorem() == 2) {
    // literal reading p^{K-1} + (-1)/(p-1) + L^K p^{(K-2)/2}
    if ((c.p - 1) != 1) throw Error("printed punctured length is not an integer");
  }
  const std::int64_t orbit = spec.orbit_size();
  if (n % orbit) throw Error("length is not divisible by the orbit size");
  return static_cast<std::uint64_t>(n / orbit);
}

// ---------------------------------------------------------------------------
// per-codeword symbol counts

namespace {

// N_{lambda,rho}(a, b); T is nullopt when b is not solvable.
std::int64_t n_lambda_rho(const Ctx& c, std::optional<std::uint32_t> T, std::uint32_t rho) {
  const auto base = c.P(c.K - 2);
  const bool solv = T.has_value();
  const std::int64_t t = T.value_or(0);
  const std::int64_t r = rho;
  const std::int64_t p = c.p;

  if (c.lam == 0) {
    // K odd pattern with the given L power and half exponent, sign-corrected
    auto odd_pattern = [&](std::int64_t lpow, std::int64_t num) {
      if (t == 0) return base;
      const auto e = c.eta(-t) * c.Lp(lpow) * c.hp(num);
      if (c.has(printed::kSymbolsN1Sign) && c.cls == M2Class::Odd) return r == 0 ? base + (p - 1) * e : base - e;
      return r == 0 ? base - (p - 1) * e : base + e;
    };
    auto even_pattern = [&](std::int64_t lval, std::int64_t num) {
      if (t == 0 && r == 0) return base + (p - 1) * lval * c.hp(num);
      if ((t == 0) != (r == 0)) return base;
      return base + lval * c.hp(num);
    };
    switch (c.cls) {
      case M2Class::Odd:
        return c.k_odd() ? odd_pattern(c.K + 1, c.K - 3) : even_pattern(c.Lp(c.K), c.K - 2);
      case M2Class::TwoMod4:
        return c.m1_odd() ? odd_pattern(c.m1 + 1, c.K - 3) : even_pattern(c.Lp(c.m1), c.K - 2);
      case M2Class::ZeroMod4:
        if (c.m1_odd()) return solv ? odd_pattern(c.m1 + 1, c.K - 3 + 2 * c.v) : base;
        if (!solv) return base + (p - 1) * c.Lp(c.m1) * c.hp(c.K - 4 + 2 * c.v);
        return even_pattern(c.Lp(c.m1), c.K - 2 + 2 * c.v);
    }
    throw UnmatchedCase("symbol count case");
  }

  const std::int64_t lam = c.lam;
  const auto disc = arith::mod(r * r - 4 * lam * t, p);
  auto odd_pattern = [&](std::int64_t lpow, std::int64_t shift) {
    if (t == 0) return r == 0 ? base - c.eta(-lam) * c.Lp(lpow) * c.hp(c.K - 1 + shift) : base;
    const auto e = c.eta(-t) * c.Lp(lpow) * c.hp(c.K - 3 + shift);
    return disc == 0 ? base - (p - 1) * e : base + e;
  };
  auto even_pattern = [&](std::int64_t lval, std::int64_t num, bool flip_zero) {
    if (t == 0 && r == 0) return flip_zero ? base + lval * c.hp(num) : base - lval * c.hp(num);
    if (t == 0 || disc == 0) return base;
    return base + c.eta(disc) * lval * c.hp(num);
  };
  switch (c.cls) {
    case M2Class::Odd:
      return c.k_odd() ? odd_pattern(c.K + 1, 0) : even_pattern(c.Lp(c.K), c.K - 2, false);
    case M2Class::TwoMod4:
      return c.m1_odd() ? odd_pattern(c.m1 + 1, 0)
                        : even_pattern(c.Lp(c.m1), c.K - 2, c.has(printed::kSymbolsN4lSign));
    case M2Class::ZeroMod4:
      if (c.m1_odd()) {
        if (!solv) return base - c.eta(-lam) * c.Lp(c.m1 + 1) * c.hp(c.K - 3 + 2 * c.v);
        return odd_pattern(c.m1 + 1, 2 * c.v);
      }
      if (!solv) return base - c.Lp(c.m1) * c.hp(c.K - 4 + 2 * c.v);
      return even_pattern(c.Lp(c.m1), c.K - 2 + 2 * c.v, false);
  }
  throw UnmatchedCase("symbol count case");
}

}  // namespace

SymbolPredictor::SymbolPredictor(const CodeSpec& spec, FieldPtr f1, FieldPtr f2, std::uint32_t flags)
    : spec_(spec.full()), table_(std::move(f1), std::move(f2), spec.u), flags_(flags) {}

Composition SymbolPredictor::predict(FiniteField::Code a, FiniteField::Code b) const {
  const Ctx c(spec_, flags_);
  Composition out(spec_.p, 0);
  if (a == 0 && b == 0) {
    out[0] = static_cast<std::uint32_t>(full_length(c));
    return out;
  }
  const auto T = table_.T(a, b);
  for (std::uint32_t rho = 0; rho < spec_.p; ++rho) {
    auto n = n_lambda_rho(c, T, rho);
    if (spec_.lambda == 0 && rho == 0) --n;
    if (n < 0) throw Error("negative symbol count");
    out[rho] = static_cast<std::uint32_t>(n);
  }
  return out;
}

Composition predict_symbol_counts(const DefiningSet& ds, const FFElement& a, const FFElement& b) {
  if (a.field()->m() != ds.spec.m1 || b.field()->m() != ds.spec.m2) throw FieldMismatch("a, b do not match the spec");
  return SymbolPredictor(ds).predict(a.code(), b.code());
}

// ---------------------------------------------------------------------------
// complete weight enumerators

namespace {

class Rows {
 public:
  explicit Rows(std::uint32_t p) : p_(p) {}

  void add(std::int64_t freq, std::vector<std::int64_t> comp) {
    auto& slot = rows_[std::move(comp)];
    slot = arith::checked_add(slot, freq);
  }
  // w_0^{t0} prod_{i != 0} w_i^{ti}
  void uniform(std::int64_t freq, std::int64_t t0, std::int64_t ti) {
    std::vector<std::int64_t> c(p_, ti);
    c[0] = t0;
    add(freq, std::move(c));
  }
  void all_equal(std::int64_t freq, std::int64_t t) { add(freq, std::vector<std::int64_t>(p_, t)); }

  CompleteWeightEnumerator finish() const {
    CompleteWeightEnumerator out;
    for (const auto& [comp, freq] : rows_) {
      if (freq == 0) continue;
      if (freq < 0) throw Error("negative frequency in predicted enumerator");
      Composition c;
      for (auto t : comp) {
        if (t < 0) throw Error("negative exponent in predicted enumerator");
        c.push_back(static_cast<std::uint32_t>(t));
      }
      out[std::move(c)] += static_cast<std::uint64_t>(freq);
    }
    return out;
  }

 private:
  std::uint32_t p_;
  std::map<std::vector<std::int64_t>, std::int64_t> rows_;
};

// Monomials indexed by j in F_p^* with eta(j) = eta(lambda): symbols i = +-sqrt(4 lambda j)
// get `root`, the rest `other`.
void root_rows(const Ctx& c, Rows& rows, std::int64_t freq, std::int64_t root, std::int64_t other,
               bool skip_zero_symbol) {
  for (std::int64_t j = 1; j < c.p; ++j) {
    if (c.eta(j) != c.eta(c.lam)) continue;
    std::vector<std::int64_t> comp(c.p, other);
    if (skip_zero_symbol) comp[0] = 0;
    for (std::int64_t i = 0; i < c.p; ++i)
      if (arith::mod(i * i - 4 * c.lam * j, c.p) == 0) comp[i] = root;
    rows.add(freq, std::move(comp));
  }
}

// Monomials indexed by j in F_p^*: symbol i gets base + coef * eta(i^2 - 4 lambda j).
void disc_rows(const Ctx& c, Rows& rows, std::int64_t freq, std::int64_t base, std::int64_t coef) {
  for (std::int64_t j = 1; j < c.p; ++j) {
    std::vector<std::int64_t> comp(c.p);
    for (std::int64_t i = 0; i < c.p; ++i) comp[i] = base + coef * c.eta(i * i - 4 * c.lam * j);
    rows.add(freq, std::move(comp));
  }
}

void theorem_rows(const Ctx& c, int theorem, Rows& rows) {
  const auto p = c.p;
  const auto K = static_cast<std::int64_t>(c.K);
  const auto v = static_cast<std::int64_t>(c.v);
  const auto P2 = c.P(K - 2);
  const auto n = full_length(c);
  rows.uniform(1, n, 0);

  switch (theorem) {
    case 1: {
      const auto h = (K - 1) / 2;
      const auto d = c.hp(K - 3);
      // the origin is excluded, so every w_0 exponent carries -1
      const std::int64_t off = c.has(printed::kT1Offset) ? 0 : 1;
      rows.uniform(c.P(K - 1) - 1, P2 - 1, P2);
      rows.uniform((p - 1) / 2 * c.P(h) * (c.P(h) + 1), P2 + (p - 1) * d - off, P2 - d);
      rows.uniform((p - 1) / 2 * c.P(h) * (c.P(h) - 1), P2 - (p - 1) * d - off, P2 + d);
      return;
    }
    case 2:
    case 3: {
      const auto Lx = theorem == 2 ? c.Lp(K) : c.Lp(c.m1);
      const auto h = c.hp(K - 2);
      rows.uniform((p - 1) * h * (c.hp(K) - Lx), P2 - 1, h * (h + Lx));
      rows.uniform(n, P2 + Lx * (p - 1) * h - 1, P2);
      return;
    }
    case 4: {
      const auto Lx = c.Lp(c.m1);
      rows.uniform((p - 1) * c.hp(K - 2 - 2 * v) * (c.hp(K - 2 * v) - Lx), P2 - 1, P2 + Lx * c.hp(K - 2 + 2 * v));
      // middle row: w_0 exponent uses p^{(K-2)/2+v}
      const auto mid = c.has(printed::kT4Middle) ? c.hp(K + 2 * v) : c.hp(K - 2 + 2 * v);
      rows.uniform(c.P(K - 2 * v - 1) + Lx * (p - 1) * c.hp(K - 2 - 2 * v) - 1, P2 + Lx * (p - 1) * mid - 1, P2);
      const auto x = Lx * (p - 1) * c.hp(K - 4 + 2 * v);
      rows.uniform(c.P(K) - c.P(K - 2 * v), P2 + x - 1, P2 + x);
      return;
    }
    case 5: {
      // frequencies carry no L factor
      std::int64_t f = 1;
      if (c.has(printed::kT5FormulaFactor)) f = c.Lp(c.m1 + 1);
      if (c.has(printed::kT5TableFactor)) f = c.eta(-1) * c.Lp(c.m1 + 1);
      const auto d = c.hp(K - 3 + 2 * v);
      const auto g = f * c.hp(K - 1 - 2 * v);
      rows.uniform(c.P(K) - (p - 1) * c.P(K - 2 * v - 1) - 1, P2 - 1, P2);
      rows.uniform((p - 1) / 2 * (c.P(K - 2 * v - 1) - g), P2 - (p - 1) * d - 1, P2 + d);
      rows.uniform((p - 1) / 2 * (c.P(K - 2 * v - 1) + g), P2 + (p - 1) * d - 1, P2 - d);
      return;
    }
    case 6:
    case 8: {
      const auto E = c.eta(-static_cast<std::int64_t>(c.lam));
      const auto Lam = E * (theorem == 6 ? c.Lp(K + 1) : c.Lp(c.m1 + 1));
      const auto h = (K - 1) / 2;
      const auto d = c.hp(K - 3);
      rows.uniform(c.P(K - 1) - 1, P2 - Lam * c.P(h), P2);
      if (theorem == 8 && c.has(printed::kT8Frequencies)) {
        const auto L1 = c.Lp(c.m1 + 1);
        rows.all_equal((p - 1) / 2 * c.P(h) * (c.P(h) - L1 * (p - 1)), P2 - Lam * d);
        root_rows(c, rows, c.P(h) * (c.P(h) + L1 * (p - 1)), P2 - Lam * (p - 1) * d, P2 + Lam * d,
                  c.has(printed::kT8Others));
      } else {
        rows.all_equal((p - 1) / 2 * c.P(h) * (c.P(h) + Lam), P2 - Lam * d);
        // w_0 belongs to the remaining symbols as well
        root_rows(c, rows, c.P(h) * (c.P(h) - Lam), P2 - Lam * (p - 1) * d, P2 + Lam * d,
                  theorem == 8 && c.has(printed::kT8Others));
      }
      return;
    }
    case 7:
    case 9: {
      const auto Lx = theorem == 7 ? c.Lp(K) : c.Lp(c.m1);
      const auto h = c.hp(K - 2);
      // nonzero symbols of the second row appear p^{K-2} times
      rows.uniform(c.P(K - 1) + (p - 1) * Lx * h - 1, P2 - Lx * h, c.has(printed::kT79Row2) ? h : P2);
      disc_rows(c, rows, n, P2, (c.has(printed::kDiscSign) ? -1 : 1) * Lx * h);
      return;
    }
    case 10: {
      const auto Lx = c.Lp(c.m1);
      rows.all_equal(c.P(K) - c.P(K - 2 * v), P2 - Lx * c.hp(K - 4 + 2 * v));
      rows.uniform(c.P(K - 2 * v - 1) + Lx * (p - 1) * c.hp(K - 2 - 2 * v) - 1, P2 - Lx * c.hp(K - 2 + 2 * v), P2);
      // the last sum is added; its coefficient is L^{m1} p^{(K-2)/2+v}
      const auto mag = c.has(printed::kT10LastTerm) ? c.Lp(K) * c.hp(K - 2) : Lx * c.hp(K - 2 + 2 * v);
      disc_rows(c, rows, c.P(K - 2 * v - 1) - Lx * c.hp(K - 2 - 2 * v), P2,
                (c.has(printed::kDiscSign) ? -1 : 1) * mag);
      return;
    }
    case 11: {
      const auto E = c.eta(-static_cast<std::int64_t>(c.lam));
      const auto Lam = E * c.Lp(c.m1 + 1);
      rows.uniform(c.P(K - 2 * v - 1) - 1, P2 - Lam * (c.has(printed::kT11Row2) ? c.hp(K - 1) : c.hp(K - 1 + 2 * v)),
                   P2);
      const auto freq_tail = c.has(printed::kT11Frequency) ? c.hp(K - 3 - 2 * v) : c.hp(K - 1 - 2 * v);
      rows.all_equal(c.P(K) - (p + 1) / 2 * c.P(K - 2 * v - 1) + (p - 1) / 2 * Lam * freq_tail,
                     P2 - Lam * (c.has(printed::kT11AllEqual) ? c.hp(K - 3) : c.hp(K - 3 + 2 * v)));
      const auto root = c.has(printed::kT11Sqrt) ? c.hp(K - 1 + 2 * v) : c.hp(K - 3 + 2 * v);
      root_rows(c, rows, c.P(K - 2 * v - 1) - Lam * c.hp(K - 1 - 2 * v), P2 - Lam * (p - 1) * root,
                P2 + Lam * c.hp(K - 3 + 2 * v), false);
      return;
    }
  }
  throw UnmatchedCase("theorem " + std::to_string(theorem));
}

}  // namespace

PredictedEnumerator predict_cwe(const CodeSpec& spec, std::uint32_t flags) {
  const Ctx c(spec, flags);
  PredictedEnumerator out;
  out.spec = spec;
  out.theorem = CaseKey::of(spec).theorem();
  out.length = predict_length(spec, flags);
  // D_lambda can be empty (p = 3, m1 = m2 = 1, lambda = 0); that code is {0}
  out.dimension = out.length ? spec.K() : 0;

  Rows rows(spec.p);
  theorem_rows(c, out.theorem, rows);
  out.cwe = rows.finish();
  const auto full = project(out.cwe);
  if (!spec.punctured) {
    out.we = full;
    return out;
  }
  const auto orbit = spec.orbit_size();
  for (const auto& [w, f] : full) {
    if (w % orbit) throw Error("full-code weight not divisible by the orbit size");
    out.we[w / orbit] += f;
  }
  return out;
}

Composition fold_punctured(const Composition& c, std::uint32_t lambda) {
  const auto p = static_cast<std::uint32_t>(c.size());
  Composition out(p, 0);
  if (lambda == 0) {
    // a kept coordinate with symbol s != 0 yields every nonzero symbol once over its orbit
    const std::uint32_t nonzero = std::accumulate(c.begin() + 1, c.end(), 0u);
    out[0] = c[0] * (p - 1);
    for (std::uint32_t i = 1; i < p; ++i) out[i] = nonzero;
    return out;
  }
  out[0] = 2 * c[0];
  for (std::uint32_t i = 1; i < p; ++i) out[i] = c[i] + c[p - i];
  return out;
}

CompleteWeightEnumerator fold_punctured(const CompleteWeightEnumerator& cwe, std::uint32_t lambda) {
  CompleteWeightEnumerator out;
  for (const auto& [comp, f] : cwe) out[fold_punctured(comp, lambda)] += f;
  return out;
}

// ---------------------------------------------------------------------------
// counts over (a, b)

std::uint64_t count_A_tilde(const CodeSpec& spec, std::uint32_t t, std::uint32_t flags) {
  const Ctx c(spec, flags);
  if (c.cls == M2Class::ZeroMod4) throw WrongRegime("A~_t is only defined when m2/v is not 0 mod 4");
  const auto K = static_cast<std::int64_t>(c.K);
  const auto base = c.P(K - 1);
  t %= spec.p;
  std::int64_t r = 0;
  if (t == 0) {
    if (c.k_odd()) r = base;
    else if (c.cls == M2Class::Odd) r = base + (c.p - 1) * c.Lp(K) * c.hp(K - 2);
    else r = base + (c.p - 1) * c.Lp(c.m1) * c.hp(K - 2);
  } else {
    const auto e = c.eta(-static_cast<std::int64_t>(t));
    if (c.cls == M2Class::Odd)
      r = c.k_odd() ? base - e * c.Lp(K + 1) * c.hp(K - 1) : base - c.Lp(K) * c.hp(K - 2);
    else if (c.m1_odd())
      r = base - e * c.Lp(c.m1 + 1) * c.hp(K - 1);
    else
      r = base - c.Lp(c.has(printed::kATildePower) ? K : c.m1) * c.hp(K - 2);
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t count_A_tilde_bruteforce(const TTable& table, std::uint32_t t) {
  std::uint64_t n = 0;
  for (FiniteField::Code a = 0; a < table.f1()->order(); ++a)
    for (FiniteField::Code b = 0; b < table.f2()->order(); ++b)
      if (table.T(a, b) == std::optional<std::uint32_t>(t % table.f1()->p())) ++n;
  return n;
}

std::uint64_t count_B(std::uint32_t p, std::uint32_t m2, std::uint32_t u) {
  const auto spec = CodeSpec::make(p, 1, m2, u, 0);
  if (spec.m2_class() != M2Class::ZeroMod4) throw WrongRegime("#B is only defined when m2/v = 0 mod 4");
  return static_cast<std::uint64_t>(arith::ipow(p, m2 - 2 * spec.v()));
}

std::uint64_t count_B_bruteforce(const FiniteField& f2, std::uint32_t u) {
  const auto op = LinOperator::linearized(f2.element(1), u);
  std::uint64_t n = 0;
  for (FiniteField::Code b = 0; b < f2.order(); ++b)
    if (solve_linear(op, -f2.element(b).frobenius(u)).solvable()) ++n;
  return n;
}

std::uint64_t count_A_bar(const CodeSpec& spec, std::uint32_t t) {
  const Ctx c(spec, 0);
  if (c.cls != M2Class::ZeroMod4) throw WrongRegime("A-bar_t is only defined when m2/v = 0 mod 4");
  const auto K = static_cast<std::int64_t>(c.K);
  const auto v = static_cast<std::int64_t>(c.v);
  const auto base = c.P(K - 2 * v - 1);
  t %= spec.p;
  std::int64_t r = 0;
  if (!c.m1_odd())
    r = t == 0 ? base + c.Lp(c.m1) * (c.p - 1) * c.hp(K - 2 - 2 * v) : base - c.Lp(c.m1) * c.hp(K - 2 - 2 * v);
  else
    r = t == 0 ? base : base - c.eta(-static_cast<std::int64_t>(t)) * c.Lp(c.m1 + 1) * c.hp(K - 1 - 2 * v);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t count_A_bar_bruteforce(const TTable& table, std::uint32_t t) { return count_A_tilde_bruteforce(table, t); }

}  // namespace weilcodes
