#include "weilcodes/report.hpp"

#include "weilcodes/arith.hpp"
#include "weilcodes/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace weilcodes {

bool RunReport::ok() const {
  if (!measured) return pless_predicted;
  return match_length && match_dimension && match_we && match_cwe && match_symbols && pless_measured &&
         pless_predicted && match_reference;
}

namespace {

FieldPtr field_or_default(const FieldPtr& f, std::uint32_t p, std::uint32_t m) {
  return f ? f : FiniteField::create(p, m);
}

void attach_reference(RunReport& r, const std::optional<ReferenceRow>& reference) {
  if (!reference) return;
  r.reference = reference;
  if (r.measured) {
    const auto d = minimum_distance(r.measured->we);
    r.match_reference = reference->n == r.measured->length && reference->k == r.measured->dimension &&
                        reference->d == d && reference->we == r.measured->we;
  }
  if (reference->claim && *reference->claim != r.griesmer.classification) {
    std::ostringstream os;
    os << "published claim " << to_string(*reference->claim) << " for "
       << format_params(reference->n, reference->k, reference->d) << "; Griesmer data gives "
       << to_string(r.griesmer.classification) << " (g(k,d+1) = " << r.griesmer.g_of_d_plus_1
       << ", g(k,d+2) = " << r.griesmer.g_of_d_plus_2 << ", n = " << r.griesmer.n << ")";
    r.note = os.str();
  }
}

}  // namespace

RunReport verify(const CodeSpec& spec, std::uint64_t budget, const std::optional<ReferenceRow>& reference,
                 const Fields& fields) {
  const auto start = std::chrono::steady_clock::now();
  const auto f1 = field_or_default(fields.f1, spec.p, spec.m1);
  const auto f2 = field_or_default(fields.f2, spec.p, spec.m2);
  const auto ds = build_defining_set(spec, f1, f2);

  RunReport r;
  r.spec = spec;
  r.predicted = predict_cwe(spec);

  const SymbolPredictor predictor(spec.full(), f1, f2);
  Measured m;
  m.length = ds.length();
  std::uint64_t zero = 0;
  const std::uint32_t p = spec.p;
  for_each_codeword(ds, budget, [&](FiniteField::Code a, FiniteField::Code b, std::span<const std::uint32_t> word) {
    auto comp = composition_of(word, p);
    if (comp[0] == word.size()) ++zero;
    const auto full = spec.punctured ? fold_punctured(comp, spec.lambda) : comp;
    if (full != predictor.predict(a, b)) ++m.symbol_mismatches;
    ++m.cwe[std::move(comp)];
  });
  m.we = project(m.cwe);
  std::uint32_t lost = 0;
  for (auto z = zero; z > 1; z /= p) ++lost;
  m.dimension = spec.K() - lost;

  r.match_length = m.length == r.predicted.length;
  r.match_dimension = m.dimension == r.predicted.dimension;
  r.match_we = m.we == r.predicted.we;
  r.match_cwe = (spec.punctured ? fold_punctured(m.cwe, spec.lambda) : m.cwe) == r.predicted.cwe;
  r.match_symbols = m.symbol_mismatches == 0;
  // message multisets: sum A_j = p^K even if the map a,b -> word is not injective
  r.pless_measured = pless_check(m.we, m.length, spec.K(), p);
  r.pless_predicted = pless_check(r.predicted.we, r.predicted.length, spec.K(), p);
  r.griesmer = classify(p, m.length, m.dimension, minimum_distance(m.we));
  r.measured = std::move(m);
  attach_reference(r, reference);
  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RunReport predict_only(const CodeSpec& spec) {
  RunReport r;
  r.spec = spec;
  r.predicted = predict_cwe(spec);
  r.pless_predicted = pless_check(r.predicted.we, r.predicted.length, spec.K(), spec.p);
  r.griesmer = classify(spec.p, r.predicted.length, r.predicted.dimension, minimum_distance(r.predicted.we));
  return r;
}

std::vector<RunReport> verify_table(const std::string& which, std::uint64_t budget) {
  std::vector<RunReport> out;
  for (const auto& row : reference_table(which)) out.push_back(verify(row.spec, budget, row));
  return out;
}

// ---------------------------------------------------------------------------
// sweeps

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw Error("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw Error("expected an integer, got '" + s + "'");
  return v;
}

// "1-3,5" -> {1,2,3,5}; a leading '-' is a sign
std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(s, ',')) {
    if (item.empty()) throw Error("empty list item in '" + s + "'");
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const auto lo = parse_int(item.substr(0, dash)), hi = parse_int(item.substr(dash + 1));
    if (hi < lo) throw Error("empty range '" + item + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> positive(const std::vector<std::int64_t>& v, const std::string& key) {
  std::vector<std::uint32_t> out;
  for (auto x : v) {
    if (x <= 0) throw Error(key + " values must be positive");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

}  // namespace

std::vector<CodeSpec> parse_sweep(const std::string& text) {
  std::string src = trim(text);
  if (src == "acceptance") src = "p=3,5;m1=1-3;m2=1-4;u=1-3;lambda=all;max_order=15625;punctured=both";

  std::vector<std::uint32_t> ps{3}, m1s{1}, m2s{1}, us{1};
  std::optional<std::vector<std::int64_t>> lambdas;  // nullopt = all
  std::uint64_t max_order = UINT64_MAX;
  std::vector<bool> punct{false};
  std::set<std::string> seen;
  for (const auto& clause : split(src, ';')) {
    if (clause.empty()) continue;
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw Error("sweep clause '" + clause + "' is not key=value");
    const auto key = trim(clause.substr(0, eq)), value = trim(clause.substr(eq + 1));
    if (!seen.insert(key).second) throw Error("sweep key '" + key + "' given twice");
    if (key == "p") ps = positive(parse_list(value), key);
    else if (key == "m1") m1s = positive(parse_list(value), key);
    else if (key == "m2") m2s = positive(parse_list(value), key);
    else if (key == "u") us = positive(parse_list(value), key);
    else if (key == "lambda") {
      if (value == "all") lambdas.reset();
      else lambdas = parse_list(value);
    } else if (key == "max_order") {
      const auto v = parse_int(value);
      if (v <= 0) throw Error("max_order must be positive");
      max_order = static_cast<std::uint64_t>(v);
    } else if (key == "punctured") {
      if (value == "no") punct = {false};
      else if (value == "yes") punct = {true};
      else if (value == "both") punct = {false, true};
      else throw Error("punctured must be no, yes or both");
    } else {
      throw Error("unknown sweep key '" + key + "'");
    }
  }
  if (!seen.count("lambda")) lambdas = std::vector<std::int64_t>{0};

  std::vector<CodeSpec> out;
  for (auto p : ps)
    for (auto m1 : m1s)
      for (auto m2 : m2s) {
        const auto order = static_cast<long double>(std::pow(static_cast<long double>(p), m1 + m2));
        if (order > static_cast<long double>(max_order)) continue;
        for (auto u : us) {
          std::set<std::uint32_t> lams;
          if (!lambdas)
            for (std::uint32_t l = 0; l < p; ++l) lams.insert(l);
          else
            for (auto l : *lambdas) lams.insert(static_cast<std::uint32_t>(arith::mod(l, p)));
          for (auto l : lams)
            for (bool pu : punct) out.push_back(CodeSpec::make(p, m1, m2, u, l, pu));
        }
      }
  return out;
}

std::vector<RunReport> run_sweep(const std::vector<CodeSpec>& specs, std::uint64_t budget, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(specs.size(), 1));
  std::vector<RunReport> out(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
      try {
        out[i] = verify(specs[i], budget);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// ---------------------------------------------------------------------------
// formatting

std::string format_we(const WeightEnumerator& we) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, f] : we) {
    if (!f) continue;
    if (!first) os << " + ";
    first = false;
    if (w == 0) {
      os << f;
      continue;
    }
    if (f != 1) os << f;
    os << "z^" << w;
  }
  return first ? "0" : os.str();
}

std::string format_cwe(const CompleteWeightEnumerator& cwe) {
  std::vector<std::pair<std::uint64_t, const Composition*>> order;
  for (const auto& [comp, f] : cwe) {
    std::uint64_t n = 0;
    for (auto t : comp) n += t;
    order.push_back({n - comp[0], &comp});
  }
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : *x.second < *y.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, comp] : order) {
    if (!first) os << " + ";
    first = false;
    const auto f = cwe.at(*comp);
    bool any = false;
    if (f != 1) {
      os << f;
      any = true;
    }
    for (std::size_t i = 0; i < comp->size(); ++i) {
      if (!(*comp)[i]) continue;
      os << (any ? " " : "") << "w" << i << "^" << (*comp)[i];
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

std::string format_params(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

json to_json(const CodeSpec& spec) {
  return json{{"p", spec.p},
              {"m1", spec.m1},
              {"m2", spec.m2},
              {"u", spec.u},
              {"lambda", spec.lambda},
              {"punctured", spec.punctured},
              {"K", spec.K()},
              {"v", spec.v()},
              {"m2_over_v", spec.m2_over_v()},
              {"m2_class", to_string(spec.m2_class())}};
}

json to_json(const WeightEnumerator& we) {
  json out = json::array();
  for (const auto& [w, f] : we) out.push_back(json::array({w, f}));
  return out;
}

json to_json(const CompleteWeightEnumerator& cwe) {
  json out = json::array();
  for (const auto& [c, f] : cwe) out.push_back(json::array({json(c), f}));
  return out;
}

json to_json(const GriesmerReport& g) {
  return json{{"p", g.p},
              {"n", g.n},
              {"k", g.k},
              {"d", g.d},
              {"g_of_d", g.g_of_d},
              {"g_of_d_plus_1", g.g_of_d_plus_1},
              {"g_of_d_plus_2", g.g_of_d_plus_2},
              {"max_d_allowed", g.max_d_allowed},
              {"classification", to_string(g.classification)}};
}

json to_json(const RunReport& r, bool with_timing) {
  json out;
  out["spec"] = to_json(r.spec);
  out["predicted"] = json{{"theorem", r.predicted.theorem},
                          {"length", r.predicted.length},
                          {"dimension", r.predicted.dimension},
                          {"we", to_json(r.predicted.we)},
                          {"cwe", to_json(r.predicted.cwe)},
                          {"cwe_is_full_code", r.spec.punctured}};
  out["griesmer"] = to_json(r.griesmer);
  if (r.measured) {
    const auto& m = *r.measured;
    out["length"] = m.length;
    out["dimension"] = m.dimension;
    out["we"] = to_json(m.we);
    out["cwe"] = to_json(m.cwe);
    out["symbol_mismatches"] = m.symbol_mismatches;
    out["match"] = json{{"length", r.match_length},   {"dimension", r.match_dimension},
                        {"we", r.match_we},           {"cwe", r.match_cwe},
                        {"symbols", r.match_symbols}, {"reference", r.match_reference},
                        {"all", r.ok()}};
    out["pless"] = json{{"measured", r.pless_measured}, {"predicted", r.pless_predicted}};
  } else {
    out["pless"] = json{{"predicted", r.pless_predicted}};
  }
  if (r.reference) {
    const auto& ref = *r.reference;
    json j{{"table", ref.table}, {"n", ref.n}, {"k", ref.k}, {"d", ref.d}, {"we", to_json(ref.we)}};
    if (ref.claim) j["claim"] = to_string(*ref.claim);
    out["reference"] = j;
  }
  if (!r.note.empty()) out["note"] = r.note;
  if (with_timing) out["timing_ms"] = r.timing_ms;
  return out;
}

// ---------------------------------------------------------------------------
// budget

namespace {

std::uint64_t parse_budget(const std::string& s, const std::string& origin) {
  const auto t = trim(s);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &used);
  } catch (const std::exception&) {
    throw Error("invalid budget in " + origin + ": '" + s + "'");
  }
  if (used != t.size() || t.empty() || t[0] == '-') throw Error("invalid budget in " + origin + ": '" + s + "'");
  return v;
}

}  // namespace

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const std::optional<std::string>& config_path) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WEILCODES_BUDGET"); env && *env) return parse_budget(env, "WEILCODES_BUDGET");
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw Error("cannot read config file " + *config_path);
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      if (trim(line.substr(0, eq)) == "budget") return parse_budget(line.substr(eq + 1), *config_path);
    }
  }
  return kDefaultBudget;
}

}  // namespace weilcodes
