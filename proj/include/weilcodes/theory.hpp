#pragma once

// Closed-form predictions for C_{D_lambda}: lengths, per-codeword symbol counts, the auxiliary
// counts over (a, b), and complete weight enumerators for every theorem case.

#include "weilcodes/codes.hpp"
#include "weilcodes/gf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weilcodes {

struct CaseKey {
  bool lambda_zero = true;
  M2Class m2_class = M2Class::Odd;
  /// Parity of K when m2/v is odd, of m1 otherwise.
  bool parity_odd = false;

  static CaseKey of(const CodeSpec& spec);
  /// 1..11; 1-5 for lambda = 0, 6-11 otherwise.
  int theorem() const;
};

/// Places where the published formulas admit more than one reading. Each bit selects the
/// literal printed form instead of the reading that matches exhaustive enumeration; the
/// default (no bits) is what the library uses.
namespace printed {
enum Flag : std::uint32_t {
  kLengthZeroMod4 = 1u << 0,    // lambda != 0, m2/v = 0 mod 4, m1 odd: exponent without +v
  kSymbolsN1Sign = 1u << 1,     // lambda = 0, m2/v odd, K odd: signs of the two T != 0 rows swapped
  kSymbolsN4lSign = 1u << 2,    // lambda != 0, m2/v = 2 mod 4, m1 even, T = rho = 0: "+" instead of "-"
  kATildePower = 1u << 3,       // m2/v = 2 mod 4, m1 even, t != 0: L^K instead of L^{m1}
  kT1Offset = 1u << 4,          // theorem 1: no -1 on w_0 in the two +-p^{(K-3)/2} rows
  kT2PuncturedLength = 1u << 5, // theorem 2: p^{K-1} + (-1)/(p-1) + L^K p^{(K-2)/2}
  kT4Middle = 1u << 6,          // theorem 4: w_0 exponent of the middle row uses p^{K/2+v}
  kT5FormulaFactor = 1u << 7,   // theorem 5: frequencies carry L^{m1+1}
  kT5TableFactor = 1u << 8,     // theorem 5: frequencies carry eta_1(-1) L^{m1+1}
  kT79Row2 = 1u << 9,           // theorems 7, 9: second row has w_i^{p^{(K-2)/2}}
  kDiscSign = 1u << 10,         // theorems 7, 9, 10: -eta_1(i^2 - 4 lambda j) in the last sum
  kT8Frequencies = 1u << 11,    // theorem 8: frequencies with L^{m1+1}(p-1)
  kT8Others = 1u << 12,         // theorem 8: remaining symbols range over F_p^* only
  kT10LastTerm = 1u << 13,      // theorem 10: last sum uses L^K p^{(K-2)/2}
  kT11Row2 = 1u << 14,          // theorem 11: second row w_0 exponent with p^{(K-1)/2}
  kT11Frequency = 1u << 15,     // theorem 11: all-equal frequency with p^{(K-3)/2-v}
  kT11AllEqual = 1u << 16,      // theorem 11: all-equal exponent with p^{(K-3)/2}
  kT11Sqrt = 1u << 17,          // theorem 11: root symbols with (p-1)p^{(K-1)/2+v}
};
inline constexpr std::uint32_t kAll = (1u << 18) - 1;
std::string name(Flag f);
std::vector<Flag> all_flags();
}  // namespace printed

/// T(a, b) data for one (F_{p^m1}, F_{p^m2}, u).
class TTable {
 public:
  TTable(FieldPtr f1, FieldPtr f2, std::uint32_t u);

  /// Tr(gamma_b^{p^u+1}), or nullopt when X^{p^{2u}} + X = -b^{p^u} has no solution.
  std::optional<std::uint32_t> gamma_trace(FiniteField::Code b) const;
  /// T(a, b) in F_p, or nullopt when b is not solvable.
  std::optional<std::uint32_t> T(FiniteField::Code a, FiniteField::Code b) const;
  const FieldPtr& f1() const noexcept { return f1_; }
  const FieldPtr& f2() const noexcept { return f2_; }

 private:
  FieldPtr f1_, f2_;
  std::vector<std::uint32_t> a_part_;   // Tr(a^2/4)
  std::vector<std::int32_t> b_part_;    // -1 when unsolvable
};

/// N_lambda for the full code, or the punctured length when spec.punctured.
std::uint64_t predict_length(const CodeSpec& spec, std::uint32_t flags = 0);

/// N_{lambda,rho}(a,b) assembled into a full-code composition (origin removed when lambda = 0).
class SymbolPredictor {
 public:
  SymbolPredictor(const CodeSpec& spec, FieldPtr f1, FieldPtr f2, std::uint32_t flags = 0);
  explicit SymbolPredictor(const DefiningSet& ds, std::uint32_t flags = 0)
      : SymbolPredictor(ds.spec, ds.f1, ds.f2, flags) {}

  Composition predict(FiniteField::Code a, FiniteField::Code b) const;
  const TTable& table() const noexcept { return table_; }

 private:
  CodeSpec spec_;
  TTable table_;
  std::uint32_t flags_;
};

Composition predict_symbol_counts(const DefiningSet& ds, const FFElement& a, const FFElement& b);

struct PredictedEnumerator {
  CodeSpec spec;
  int theorem = 0;
  std::uint64_t length = 0;
  std::uint32_t dimension = 0;
  /// CWE of the full code C_{D_lambda}; for a punctured spec, compare against folded measurements.
  CompleteWeightEnumerator cwe;
  /// WE of the code named by spec (punctured weights divided by the orbit size).
  WeightEnumerator we;
};

PredictedEnumerator predict_cwe(const CodeSpec& spec, std::uint32_t flags = 0);

/// Full-code composition of a punctured codeword: each kept coordinate stands for its orbit.
Composition fold_punctured(const Composition& c, std::uint32_t lambda);
CompleteWeightEnumerator fold_punctured(const CompleteWeightEnumerator& cwe, std::uint32_t lambda);

/// #{(a, b) : T(a, b) = t}, (0,0) included. WrongRegime when m2/v = 0 mod 4.
std::uint64_t count_A_tilde(const CodeSpec& spec, std::uint32_t t, std::uint32_t flags = 0);
std::uint64_t count_A_tilde_bruteforce(const TTable& table, std::uint32_t t);

/// Number of b with X^{p^{2u}} + X = -b^{p^u} solvable. WrongRegime unless m2/v = 0 mod 4.
std::uint64_t count_B(std::uint32_t p, std::uint32_t m2, std::uint32_t u);
std::uint64_t count_B_bruteforce(const FiniteField& f2, std::uint32_t u);

/// #{(a, b) : b solvable, T(a, b) = t}. WrongRegime unless m2/v = 0 mod 4.
std::uint64_t count_A_bar(const CodeSpec& spec, std::uint32_t t);
std::uint64_t count_A_bar_bruteforce(const TTable& table, std::uint32_t t);

}  // namespace weilcodes
