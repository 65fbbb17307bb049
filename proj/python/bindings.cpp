#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weilcodes/bounds.hpp"
#include "weilcodes/charsum.hpp"
#include "weilcodes/cli.hpp"
#include "weilcodes/codes.hpp"
#include "weilcodes/errors.hpp"
#include "weilcodes/report.hpp"
#include "weilcodes/theory.hpp"

#include <sstream>

namespace py = pybind11;
using namespace weilcodes;

namespace {

py::dict we_dict(const WeightEnumerator& we) {
  py::dict d;
  for (const auto& [w, f] : we) d[py::int_(w)] = f;
  return d;
}

py::dict cwe_dict(const CompleteWeightEnumerator& cwe) {
  py::dict d;
  for (const auto& [c, f] : cwe) d[py::tuple(py::cast(c))] = f;
  return d;
}

FFElement element(const FieldPtr& f, const std::vector<std::uint32_t>& coeffs) {
  return f->element(f->from_coeffs(coeffs));
}

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trace codes over D_lambda: enumeration, closed-form prediction, Griesmer checks";

  // translators run newest first, so the subclass is registered last
  const auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  py::class_<CodeSpec>(m, "CodeSpec")
      .def(py::init(&CodeSpec::make), py::arg("p"), py::arg("m1"), py::arg("m2"), py::arg("u"),
           py::arg("lam") = 0, py::arg("punctured") = false)
      .def_readonly("p", &CodeSpec::p)
      .def_readonly("m1", &CodeSpec::m1)
      .def_readonly("m2", &CodeSpec::m2)
      .def_readonly("u", &CodeSpec::u)
      .def_readonly("lam", &CodeSpec::lambda)
      .def_readonly("punctured", &CodeSpec::punctured)
      .def_property_readonly("K", &CodeSpec::K)
      .def_property_readonly("v", &CodeSpec::v)
      .def_property_readonly("m2_over_v", &CodeSpec::m2_over_v)
      .def_property_readonly("m2_class", [](const CodeSpec& s) { return to_string(s.m2_class()); })
      .def_property_readonly("theorem", [](const CodeSpec& s) { return CaseKey::of(s).theorem(); })
      .def("__eq__", [](const CodeSpec& a, const CodeSpec& b) { return a == b; })
      .def("__hash__", [](const CodeSpec& s) { return py::hash(py::str(s.label())); })
      .def("__repr__", [](const CodeSpec& s) { return "CodeSpec(" + s.label() + ")"; });

  m.def(
      "defining_set",
      [](const CodeSpec& spec) {
        const auto ds = build_defining_set(spec);
        std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> out;
        out.reserve(ds.length());
        for (auto [x, y] : ds.points) out.emplace_back(ds.f1->coeffs(x), ds.f2->coeffs(y));
        return out;
      },
      py::arg("spec"), "Points (x, y) of D_lambda as coefficient lists, in coordinate order.");

  m.def(
      "encode",
      [](const CodeSpec& spec, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        const auto ds = build_defining_set(spec);
        return encode(ds, element(ds.f1, a), element(ds.f2, b));
      },
      py::arg("spec"), py::arg("a"), py::arg("b"), "Codeword of message (a, b), given as coefficient lists.");

  m.def(
      "enumerate",
      [](const CodeSpec& spec, std::uint64_t budget) {
        std::optional<Enumeration> e;
        {
          py::gil_scoped_release release;
          e = complete_weight_enumerator(build_defining_set(spec), budget);
        }
        py::dict d;
        d["length"] = e->length;
        d["dimension"] = e->dimension;
        d["we"] = we_dict(e->we);
        d["cwe"] = cwe_dict(e->cwe);
        return d;
      },
      py::arg("spec"), py::arg("budget") = kDefaultBudget, "Exhaustive weight and complete weight enumerators.");

  m.def(
      "predict",
      [](const CodeSpec& spec) {
        const auto r = predict_cwe(spec);
        py::dict d;
        d["theorem"] = r.theorem;
        d["length"] = r.length;
        d["dimension"] = r.dimension;
        d["we"] = we_dict(r.we);
        d["cwe"] = cwe_dict(r.cwe);
        return d;
      },
      py::arg("spec"), "Closed-form enumerators; cwe is that of the full code even for punctured specs.");

  m.def(
      "verify",
      [](const CodeSpec& spec, std::uint64_t budget) {
        RunReport r;
        {
          py::gil_scoped_release release;
          r = verify(spec, budget);
        }
        return from_json(to_json(r, false));
      },
      py::arg("spec"), py::arg("budget") = kDefaultBudget, "Measured versus predicted report, as a dict.");

  m.def(
      "verify_table",
      [](const std::string& which, std::uint64_t budget) {
        py::list out;
        for (const auto& r : verify_table(which, budget)) out.append(from_json(to_json(r, false)));
        return out;
      },
      py::arg("which"), py::arg("budget") = kDefaultBudget, "Recompute one of the tables 12, 12p, 13, 13p.");

  m.def(
      "parse_sweep",
      [](const std::string& text) { return parse_sweep(text); }, py::arg("text"));

  m.def("griesmer", &griesmer, py::arg("p"), py::arg("k"), py::arg("d"));
  m.def(
      "classify",
      [](std::uint32_t p, std::uint64_t n, std::uint64_t k, std::uint64_t d) {
        return from_json(to_json(classify(p, n, k, d)));
      },
      py::arg("p"), py::arg("n"), py::arg("k"), py::arg("d"));
  m.def(
      "pless_check",
      [](const std::map<std::uint64_t, std::uint64_t>& we, std::uint64_t n, std::uint64_t k, std::uint32_t p) {
        return pless_check(we, n, k, p);
      },
      py::arg("we"), py::arg("n"), py::arg("k"), py::arg("p"));

  m.def(
      "gauss_sum",
      [](std::uint32_t p, std::uint32_t m, bool brute) {
        return (brute ? gauss_sum_bruteforce(*FiniteField::create(p, m)) : gauss_sum_closed(p, m)).coeffs();
      },
      py::arg("p"), py::arg("m"), py::arg("brute") = false,
      "G_m as coefficients of 1, zeta, ..., zeta^(p-1) (the last is always 0).");

  m.def(
      "weil_sum",
      [](std::uint32_t p, std::uint32_t m, std::uint64_t u, const std::vector<std::uint32_t>& a,
         const std::vector<std::uint32_t>& b, bool brute) {
        const auto f = FiniteField::create(p, m);
        const auto A = element(f, a), B = element(f, b);
        return (brute ? weil_sum_bruteforce(u, A, B) : weil_sum_closed(u, A, B)).coeffs();
      },
      py::arg("p"), py::arg("m"), py::arg("u"), py::arg("a"), py::arg("b"), py::arg("brute") = false,
      "S_{m,u}(a, b) in the same coefficient form as gauss_sum.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit code, stdout, stderr).");
}
