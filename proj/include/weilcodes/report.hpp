#pragma once

// Measured-versus-predicted reports, the published reference tables, and sweeps.

#include "weilcodes/bounds.hpp"
#include "weilcodes/codes.hpp"
#include "weilcodes/theory.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weilcodes {

/// A row of one of the published example tables, with the values claimed there.
struct ReferenceRow {
  std::string table;  // "12", "12p", "13", "13p"
  CodeSpec spec;
  std::uint64_t n = 0, k = 0, d = 0;
  WeightEnumerator we;
  std::optional<Optimality> claim;  // optimality stated alongside the table
};

/// "12", "12p", "13" or "13p". Throws Error on anything else.
std::vector<ReferenceRow> reference_table(const std::string& which);

struct Measured {
  std::uint64_t length = 0;
  std::uint32_t dimension = 0;
  WeightEnumerator we;
  CompleteWeightEnumerator cwe;
  std::uint64_t symbol_mismatches = 0;  // codewords whose composition differs from the prediction
};

struct RunReport {
  CodeSpec spec;
  std::optional<Measured> measured;
  PredictedEnumerator predicted;

  bool match_length = false;
  bool match_dimension = false;
  bool match_we = false;
  bool match_cwe = false;
  bool match_symbols = false;
  bool pless_measured = false;
  bool pless_predicted = false;

  GriesmerReport griesmer;
  std::optional<ReferenceRow> reference;
  bool match_reference = true;
  std::string note;  // informational, e.g. a disputed optimality claim

  std::int64_t timing_ms = 0;

  bool ok() const;
};

struct Fields {
  FieldPtr f1, f2;
};

/// Enumerates, predicts and compares. Throws BudgetExceeded.
RunReport verify(const CodeSpec& spec, std::uint64_t budget, const std::optional<ReferenceRow>& reference = std::nullopt,
                 const Fields& fields = {});

/// Prediction only; no enumeration.
RunReport predict_only(const CodeSpec& spec);

std::vector<RunReport> verify_table(const std::string& which, std::uint64_t budget);

/// Grammar in docs/formats.md; "acceptance" names the standard sweep.
std::vector<CodeSpec> parse_sweep(const std::string& text);

/// Runs specs in parallel; results come back in input order.
std::vector<RunReport> run_sweep(const std::vector<CodeSpec>& specs, std::uint64_t budget, unsigned threads = 0);

/// "1 + 60z^12 + 20z^18".
std::string format_we(const WeightEnumerator& we);
/// "w0^20 + 60 w0^8 w1^6 w2^6 + ...".
std::string format_cwe(const CompleteWeightEnumerator& cwe);
std::string format_params(std::uint64_t n, std::uint64_t k, std::uint64_t d);

nlohmann::json to_json(const CodeSpec& spec);
nlohmann::json to_json(const WeightEnumerator& we);
nlohmann::json to_json(const CompleteWeightEnumerator& cwe);
nlohmann::json to_json(const GriesmerReport& g);
nlohmann::json to_json(const RunReport& r, bool with_timing = true);

/// Budget precedence: flag, then WEILCODES_BUDGET, then `budget=` in the config file, then the default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const std::optional<std::string>& config_path);

}  // namespace weilcodes
