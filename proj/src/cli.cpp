#include "weilcodes/cli.hpp"

#include "weilcodes/bounds.hpp"
#include "weilcodes/errors.hpp"
#include "weilcodes/report.hpp"
#include "weilcodes/theory.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace weilcodes {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct SpecArgs {
  std::optional<std::uint32_t> p, m1, m2, u;
  std::int64_t lambda = 0;
  bool punctured = false;
  std::string modulus1, modulus2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "characteristic (odd prime)");
    cmd->add_option("--m1", m1, "degree of the first field");
    cmd->add_option("--m2", m2, "degree of the second field");
    cmd->add_option("--u", u, "exponent u in y^{p^u+1}");
    cmd->add_option("--lambda", lambda, "right-hand side, any integer, reduced mod p");
    cmd->add_flag("--punctured", punctured, "keep one point per scalar orbit");
    cmd->add_option("--modulus1", modulus1, "modulus of F_{p^m1}, coefficients lowest degree first, comma separated");
    cmd->add_option("--modulus2", modulus2, "modulus of F_{p^m2}, same format");
  }

  bool given() const { return p || m1 || m2 || u; }

  CodeSpec spec() const {
    if (!p || !m1 || !m2 || !u) throw CLI::ValidationError("spec", "--p, --m1, --m2 and --u are all required");
    return CodeSpec::make(*p, *m1, *m2, *u, lambda, punctured);
  }

  Fields fields(const CodeSpec& s) const {
    return {FiniteField::create(s.p, s.m1, parse_modulus(modulus1)),
            FiniteField::create(s.p, s.m2, parse_modulus(modulus2))};
  }

  static std::optional<std::vector<std::uint32_t>> parse_modulus(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<std::uint32_t> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        std::size_t used = 0;
        const auto v = std::stoul(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        out.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::exception&) {
        throw CLI::ValidationError("modulus", "bad coefficient '" + item + "'");
      }
    }
    return out;
  }
};

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::string coeff_string(const FiniteField& f, FiniteField::Code x) {
  std::string s;
  for (auto c : f.coeffs(x)) {
    if (!s.empty() && f.p() > 10) s += ',';
    s += std::to_string(c);
  }
  return s;
}

nlohmann::json modulus_json(const FiniteField& f) { return nlohmann::json(f.modulus()); }

std::string match_word(bool b) { return b ? "yes" : "NO"; }

void print_report_text(std::ostream& out, const RunReport& r) {
  const auto& pr = r.predicted;
  out << r.spec.label() << "  (theorem " << pr.theorem << ", m2/v " << to_string(r.spec.m2_class()) << ")\n";
  if (r.measured) {
    const auto& m = *r.measured;
    out << "  measured   " << format_params(m.length, m.dimension, minimum_distance(m.we)) << "  "
        << format_we(m.we) << '\n';
  }
  out << "  predicted  " << format_params(pr.length, pr.dimension, minimum_distance(pr.we)) << "  "
      << format_we(pr.we) << '\n';
  if (r.measured) {
    out << "  match      length " << match_word(r.match_length) << ", dimension " << match_word(r.match_dimension)
        << ", we " << match_word(r.match_we) << ", cwe " << match_word(r.match_cwe) << ", symbols "
        << match_word(r.match_symbols) << ", pless " << match_word(r.pless_measured && r.pless_predicted);
    if (r.reference) out << ", reference " << match_word(r.match_reference);
    out << '\n';
  }
  out << "  griesmer   " << to_string(r.griesmer.classification) << '\n';
  if (!r.note.empty()) out << "  note       " << r.note << '\n';
}

int cmd_construct(const SpecArgs& args, bool codewords, bool json, std::uint64_t budget, std::ostream& out) {
  const auto spec = args.spec();
  const auto f = args.fields(spec);
  const auto ds = build_defining_set(spec, f.f1, f.f2);
  if (codewords) {
    dump_codewords(ds, out, budget);
    return 0;
  }
  if (json) {
    nlohmann::json pts = nlohmann::json::array();
    for (auto [x, y] : ds.points) pts.push_back({ds.f1->coeffs(x), ds.f2->coeffs(y)});
    print_json(out, {{"spec", to_json(spec)},
                     {"length", ds.length()},
                     {"modulus1", modulus_json(*ds.f1)},
                     {"modulus2", modulus_json(*ds.f2)},
                     {"points", pts}});
    return 0;
  }
  out << spec.label() << '\n'
      << "  F1 = " << ds.f1->describe() << "\n  F2 = " << ds.f2->describe() << '\n'
      << "  K = " << spec.K() << ", v = " << spec.v() << ", m2/v = " << spec.m2_over_v() << '\n'
      << "  length " << ds.length() << '\n';
  for (auto [x, y] : ds.points) out << "  " << coeff_string(*ds.f1, x) << ' ' << coeff_string(*ds.f2, y) << '\n';
  return 0;
}

int cmd_enumerate(const SpecArgs& args, bool json, std::uint64_t budget, std::ostream& out) {
  const auto spec = args.spec();
  const auto f = args.fields(spec);
  const auto ds = build_defining_set(spec, f.f1, f.f2);
  const auto e = complete_weight_enumerator(ds, budget);
  const auto d = minimum_distance(e.we);
  const auto g = classify(spec.p, e.length, e.dimension, d);
  if (json) {
    print_json(out, {{"spec", to_json(spec)},
                     {"length", e.length},
                     {"dimension", e.dimension},
                     {"we", to_json(e.we)},
                     {"cwe", to_json(e.cwe)},
                     {"pless", pless_check(e.we, e.length, spec.K(), spec.p)},
                     {"griesmer", to_json(g)}});
    return 0;
  }
  out << spec.label() << '\n'
      << "  " << format_params(e.length, e.dimension, d) << "  " << to_string(g.classification) << '\n'
      << "  WE   " << format_we(e.we) << '\n'
      << "  CWE  " << format_cwe(e.cwe) << '\n';
  return 0;
}

int cmd_predict(const SpecArgs& args, bool json, std::ostream& out) {
  const auto r = predict_only(args.spec());
  if (json) {
    print_json(out, to_json(r, false));
    return 0;
  }
  print_report_text(out, r);
  out << "  CWE" << (r.spec.punctured ? " (full code)" : "") << "  " << format_cwe(r.predicted.cwe) << '\n';
  return 0;
}

int report_many(const std::vector<RunReport>& reports, bool json, std::ostream& out) {
  bool all = true;
  for (const auto& r : reports) all = all && r.ok();
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    print_json(out, {{"reports", arr}, {"count", reports.size()}, {"all", all}});
  } else {
    std::size_t bad = 0;
    for (const auto& r : reports) {
      if (!r.ok()) ++bad;
      print_report_text(out, r);
    }
    out << reports.size() << " specs, " << bad << " mismatched\n";
  }
  return all ? 0 : kExitMismatch;
}

int cmd_verify(const SpecArgs& args, const std::string& sweep, bool json, std::uint64_t budget, unsigned threads,
               std::ostream& out) {
  if (!sweep.empty()) {
    if (args.given()) throw CLI::ValidationError("verify", "--sweep cannot be combined with a single spec");
    return report_many(run_sweep(parse_sweep(sweep), budget, threads), json, out);
  }
  const auto spec = args.spec();
  const auto r = verify(spec, budget, std::nullopt, args.fields(spec));
  if (json)
    print_json(out, to_json(r));
  else
    print_report_text(out, r);
  return r.ok() ? 0 : kExitMismatch;
}

int cmd_tables(const std::string& which, bool json, std::uint64_t budget, std::ostream& out) {
  const auto reports = verify_table(which, budget);
  if (json) return report_many(reports, true, out);
  bool all = true;
  out << "table " << which << " (p = 3)\n";
  out << std::left << std::setw(8) << "lambda" << std::setw(4) << "m1" << std::setw(4) << "m2" << std::setw(3) << "u"
      << std::setw(3) << "K" << std::setw(6) << "m2/v" << std::setw(14) << "[n,k,d]" << std::setw(16)
      << "griesmer" << std::setw(7) << "match" << "weight enumerator\n";
  for (const auto& r : reports) {
    all = all && r.ok();
    const auto& m = *r.measured;
    const auto lam = r.spec.lambda == r.spec.p - 1 ? std::string("-1") : std::to_string(r.spec.lambda);
    out << std::setw(8) << lam << std::setw(4) << r.spec.m1 << std::setw(4) << r.spec.m2 << std::setw(3)
        << r.spec.u << std::setw(3) << r.spec.K() << std::setw(6) << r.spec.m2_over_v() << std::setw(14)
        << format_params(m.length, m.dimension, minimum_distance(m.we)) << std::setw(16)
        << to_string(r.griesmer.classification) << std::setw(7) << (r.ok() ? "yes" : "NO") << format_we(m.we)
        << '\n';
    if (!r.note.empty()) out << "        note: " << r.note << '\n';
  }
  return all ? 0 : kExitMismatch;
}

int cmd_griesmer(std::uint32_t p, std::uint64_t n, std::uint64_t k, std::uint64_t d, bool json, std::ostream& out) {
  if (k < 1 || d < 1) throw CLI::ValidationError("griesmer", "k and d must be at least 1");
  if (p < 2) throw CLI::ValidationError("griesmer", "p must be at least 2");
  const auto g = classify(p, n, k, d);
  if (json) {
    print_json(out, to_json(g));
    return 0;
  }
  out << format_params(n, k, d) << " over F_" << p << ": " << to_string(g.classification) << '\n'
      << "  g(k,d) = " << g.g_of_d << ", g(k,d+1) = " << g.g_of_d_plus_1 << ", g(k,d+2) = " << g.g_of_d_plus_2
      << ", largest feasible d = " << g.max_d_allowed << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace codes over defining sets D_lambda: construction, enumeration, prediction, verification"};
  app.name("weilcodes");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::optional<std::uint64_t> budget_flag;
  std::optional<std::string> config;
  unsigned threads = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget_flag, "maximum codewords (p^K) per enumeration");
  app.add_option("--config", config, "key=value file; `budget=N` sets the default budget");
  app.add_option("--threads", threads, "worker threads for sweeps (0 = hardware)");

  SpecArgs spec_args;
  bool codewords = false;
  auto* construct = app.add_subcommand("construct", "defining set statistics and points");
  spec_args.attach(construct);
  construct->add_flag("--codewords", codewords, "dump every codeword instead");
  auto* enumerate = app.add_subcommand("enumerate", "brute-force weight enumerators");
  spec_args.attach(enumerate);
  auto* predict = app.add_subcommand("predict", "closed-form weight enumerators");
  spec_args.attach(predict);
  std::string sweep;
  auto* verify_cmd = app.add_subcommand("verify", "compare enumeration with prediction");
  spec_args.attach(verify_cmd);
  verify_cmd->add_option("--sweep", sweep, "range spec, or `acceptance`");
  std::string which;
  auto* tables = app.add_subcommand("tables", "recompute a published example table");
  tables->add_option("--which", which, "table")->required()->check(CLI::IsMember({"12", "12p", "13", "13p"}));
  std::uint32_t gp = 3;
  std::uint64_t gn = 0, gk = 0, gd = 0;
  auto* gries = app.add_subcommand("griesmer", "Griesmer classification of [n,k,d]_p");
  gries->add_option("--p", gp, "field size")->required();
  gries->add_option("--n", gn, "length")->required();
  gries->add_option("--k", gk, "dimension")->required();
  gries->add_option("--d", gd, "minimum distance")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool json = format == "json";
  try {
    const auto budget = resolve_budget(budget_flag, config);
    if (construct->parsed()) return cmd_construct(spec_args, codewords, json, budget, out);
    if (enumerate->parsed()) return cmd_enumerate(spec_args, json, budget, out);
    if (predict->parsed()) return cmd_predict(spec_args, json, out);
    if (verify_cmd->parsed()) return cmd_verify(spec_args, sweep, json, budget, threads, out);
    if (tables->parsed()) return cmd_tables(which, json, budget, out);
    if (gries->parsed()) return cmd_griesmer(gp, gn, gk, gd, json, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"weilcodes"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace weilcodes
