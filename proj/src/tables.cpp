#include "weilcodes/errors.hpp"
#include "weilcodes/report.hpp"

namespace weilcodes {

namespace {

struct Raw {
  std::int64_t lambda;
  std::uint32_t m1, m2, u;
  std::uint64_t n, k, d;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> we;  // without the zero word
  std::optional<Optimality> claim;
};

// p = 3 throughout. The [188,6,108] row is listed with u = 3; u = 1 gives the same code.
const std::vector<Raw> kTable12 = {
    {0, 3, 2, 2, 80, 5, 48, {{48, 90}, {54, 80}, {60, 72}}, {}},
    {0, 2, 2, 2, 32, 4, 18, {{18, 32}, {24, 48}}, {}},
    {0, 2, 2, 1, 20, 4, 12, {{12, 60}, {18, 20}}, Optimality::Optimal},
    {0, 2, 4, 2, 224, 6, 144, {{144, 504}, {162, 224}}, {}},
    {0, 2, 4, 3, 188, 6, 108, {{108, 60}, {126, 648}, {162, 20}}, {}},
    {0, 3, 4, 1, 728, 7, 432, {{432, 90}, {486, 2024}, {540, 72}}, {}},
};

const std::vector<Raw> kTable12p = {
    {0, 3, 2, 2, 40, 5, 24, {{24, 90}, {27, 80}, {30, 72}}, {}},
    {0, 2, 2, 2, 16, 4, 9, {{9, 32}, {12, 48}}, Optimality::Optimal},
    {0, 2, 2, 1, 10, 4, 6, {{6, 60}, {9, 20}}, Optimality::Optimal},
    {0, 2, 4, 2, 112, 6, 72, {{72, 504}, {81, 224}}, Optimality::Optimal},
    {0, 2, 4, 3, 94, 6, 54, {{54, 60}, {63, 648}, {81, 20}}, {}},
    {0, 3, 4, 1, 364, 7, 216, {{216, 90}, {243, 2024}, {270, 72}}, {}},
};

const std::vector<Raw> kTable13 = {
    {-1, 3, 2, 2, 90, 5, 54, {{54, 80}, {60, 72}, {66, 90}}, {}},
    {1, 2, 2, 2, 24, 4, 12, {{12, 24}, {18, 56}}, {}},
    {-1, 2, 2, 1, 30, 4, 18, {{18, 50}, {24, 30}}, Optimality::AlmostOptimal},
    {1, 2, 4, 2, 252, 6, 162, {{162, 476}, {180, 252}}, {}},
    {-1, 2, 4, 1, 270, 6, 162, {{162, 50}, {180, 648}, {216, 30}}, {}},
    {-1, 3, 4, 1, 648, 7, 378, {{378, 72}, {432, 2034}, {486, 80}}, {}},
};

const std::vector<Raw> kTable13p = {
    {-1, 3, 2, 2, 45, 5, 27, {{27, 80}, {30, 72}, {33, 90}}, Optimality::AlmostOptimal},
    {1, 2, 2, 2, 12, 4, 6, {{6, 24}, {9, 56}}, Optimality::AlmostOptimal},
    {-1, 2, 2, 1, 15, 4, 9, {{9, 50}, {12, 30}}, Optimality::Optimal},
    {1, 2, 4, 2, 126, 6, 81, {{81, 476}, {90, 252}}, Optimality::Optimal},
    {-1, 2, 4, 1, 135, 6, 81, {{81, 50}, {90, 648}, {108, 30}}, {}},
    {-1, 3, 4, 1, 324, 7, 189, {{189, 72}, {216, 2034}, {243, 80}}, {}},
};

}  // namespace

std::vector<ReferenceRow> reference_table(const std::string& which) {
  const std::vector<Raw>* raw = nullptr;
  if (which == "12") raw = &kTable12;
  else if (which == "12p") raw = &kTable12p;
  else if (which == "13") raw = &kTable13;
  else if (which == "13p") raw = &kTable13p;
  else throw Error("unknown table '" + which + "' (expected 12, 12p, 13 or 13p)");

  const bool punctured = which.back() == 'p';
  std::vector<ReferenceRow> out;
  for (const auto& r : *raw) {
    ReferenceRow row;
    row.table = which;
    row.spec = CodeSpec::make(3, r.m1, r.m2, r.u, r.lambda, punctured);
    row.n = r.n;
    row.k = r.k;
    row.d = r.d;
    row.we[0] = 1;
    for (auto [w, f] : r.we) row.we[w] = f;
    row.claim = r.claim;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace weilcodes
