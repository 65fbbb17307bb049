#pragma once

// Defining sets D_lambda, the trace code over them, and exhaustive enumeration.

#include "weilcodes/gf.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace weilcodes {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class M2Class { Odd, TwoMod4, ZeroMod4 };

std::string to_string(M2Class c);

struct CodeSpec {
  std::uint32_t p = 3;
  std::uint32_t m1 = 1;
  std::uint32_t m2 = 1;
  std::uint32_t u = 1;
  std::uint32_t lambda = 0;  // reduced into [0, p)
  bool punctured = false;

  /// Validates and reduces lambda mod p. Throws CompositeP or Error.
  static CodeSpec make(std::uint32_t p, std::uint32_t m1, std::uint32_t m2, std::uint32_t u, std::int64_t lambda,
                       bool punctured = false);

  std::uint32_t K() const noexcept { return m1 + m2; }
  std::uint32_t v() const noexcept;
  std::uint32_t m2_over_v() const noexcept { return m2 / v(); }
  /// m2/2; only meaningful for even m2.
  std::uint32_t s() const noexcept { return m2 / 2; }
  M2Class m2_class() const noexcept;
  std::uint32_t orbit_size() const noexcept { return lambda == 0 ? p - 1 : 2; }
  CodeSpec full() const;
  std::string label() const;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
  friend auto operator<=>(const CodeSpec&, const CodeSpec&) = default;
};

struct DefiningSet {
  CodeSpec spec;
  FieldPtr f1;
  FieldPtr f2;
  /// (x, y) as element codes of f1, f2, in coordinate order.
  std::vector<std::pair<FiniteField::Code, FiniteField::Code>> points;

  std::size_t length() const noexcept { return points.size(); }
  /// Any point list; used for degenerate constructions in tests.
  static DefiningSet from_points(const CodeSpec& spec, FieldPtr f1, FieldPtr f2,
                                 std::vector<std::pair<FiniteField::Code, FiniteField::Code>> points);
};

/// Sort key realising lexicographic order on (x coefficients, y coefficients), low degree first.
std::uint64_t point_key(const FiniteField& f1, const FiniteField& f2, FiniteField::Code x, FiniteField::Code y);

/// Default fields: the canonical moduli of degree m1 and m2.
DefiningSet build_defining_set(const CodeSpec& spec);
DefiningSet build_defining_set(const CodeSpec& spec, FieldPtr f1, FieldPtr f2);

std::vector<std::uint32_t> encode(const DefiningSet& ds, const FFElement& a, const FFElement& b);

/// (t_0, ..., t_{p-1}): t_i coordinates equal to i.
using Composition = std::vector<std::uint32_t>;
using CompleteWeightEnumerator = std::map<Composition, std::uint64_t>;
using WeightEnumerator = std::map<std::uint64_t, std::uint64_t>;

Composition composition_of(std::span<const std::uint32_t> word, std::uint32_t p);
WeightEnumerator project(const CompleteWeightEnumerator& cwe);
std::uint64_t total(const WeightEnumerator& we);
std::uint64_t total(const CompleteWeightEnumerator& cwe);

struct Enumeration {
  std::uint64_t length = 0;
  std::uint32_t dimension = 0;
  std::uint64_t zero_codewords = 0;  // messages mapping to the zero word
  CompleteWeightEnumerator cwe;
  WeightEnumerator we;
};

/// Codewords visited by a full enumeration: p^K.
std::uint64_t enumeration_cost(const DefiningSet& ds);

/// Calls visit(a, b, word) for every message, a and b as element codes. BudgetExceeded if over budget.
void for_each_codeword(const DefiningSet& ds, std::uint64_t budget,
                       const std::function<void(FiniteField::Code, FiniteField::Code, std::span<const std::uint32_t>)>& visit);

Enumeration complete_weight_enumerator(const DefiningSet& ds, std::uint64_t budget = kDefaultBudget);

/// log_p of the number of distinct codewords.
std::uint32_t verify_dimension(const DefiningSet& ds, std::uint64_t budget = kDefaultBudget);

/// One line per codeword: "<a digits> <b digits> : <symbols>", see docs/formats.md.
void dump_codewords(const DefiningSet& ds, std::ostream& os, std::uint64_t budget = kDefaultBudget);

}  // namespace weilcodes
