#pragma once

// Brute-force comparison of a (possibly flagged) prediction against exhaustive enumeration.

#include "weilcodes/codes.hpp"
#include "weilcodes/theory.hpp"

#include <cstdint>
#include <exception>
#include <string>

namespace oracle {

using namespace weilcodes;

inline constexpr std::uint64_t kBudget = 1ull << 40;

/// Empty string when the prediction under `flags` agrees with enumeration; otherwise the first facet
/// that differs ("length", "cwe", "symbols", "counts", or the exception text).
inline std::string disagreement(const CodeSpec& spec, std::uint32_t flags) {
  try {
    const auto ds = build_defining_set(spec);
    if (predict_length(spec, flags) != ds.length()) return "length";
    if (spec.m2_class() != M2Class::ZeroMod4 && spec.lambda == 0) {
      const TTable table(ds.f1, ds.f2, spec.u);
      for (std::uint32_t t = 0; t < spec.p; ++t)
        if (count_A_tilde(spec, t, flags) != count_A_tilde_bruteforce(table, t)) return "counts";
    }
    const auto e = complete_weight_enumerator(ds, kBudget);
    const auto pred = predict_cwe(spec, flags);
    if ((spec.punctured ? fold_punctured(e.cwe, spec.lambda) : e.cwe) != pred.cwe) return "cwe";
    if (e.we != pred.we) return "we";
    const SymbolPredictor sp(spec.full(), ds.f1, ds.f2, flags);
    std::string out;
    for_each_codeword(ds, kBudget, [&](auto a, auto b, std::span<const std::uint32_t> w) {
      if (!out.empty()) return;
      auto c = composition_of(w, spec.p);
      if (spec.punctured) c = fold_punctured(c, spec.lambda);
      if (c != sp.predict(a, b)) out = "symbols";
    });
    return out;
  } catch (const std::exception& e) {
    return std::string("throws: ") + e.what();
  }
}

}  // namespace oracle
