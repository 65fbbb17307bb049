#include "weilcodes/bounds.hpp"

#include "weilcodes/errors.hpp"

namespace weilcodes {

std::string to_string(Optimality o) {
  switch (o) {
    case Optimality::Optimal: return "optimal";
    case Optimality::AlmostOptimal: return "almost-optimal";
    case Optimality::Neither: return "neither";
  }
  return "?";
}

std::uint64_t griesmer(std::uint32_t p, std::uint64_t k, std::uint64_t d) {
  if (p < 2) throw Error("griesmer: p must be at least 2");
  std::uint64_t g = 0, pi = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    g += (d + pi - 1) / pi;
    if (pi > d) {
      // every further term is 1 (d > 0) or 0
      g += (d > 0 ? 1 : 0) * (k - i - 1);
      break;
    }
    pi *= p;
  }
  return g;
}

GriesmerReport classify(std::uint32_t p, std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  GriesmerReport r;
  r.p = p;
  r.n = n;
  r.k = k;
  r.d = d;
  r.g_of_d = griesmer(p, k, d);
  r.g_of_d_plus_1 = griesmer(p, k, d + 1);
  r.g_of_d_plus_2 = griesmer(p, k, d + 2);
  if (k == 0) return r;  // the zero code: no bound, no label
  std::uint64_t best = 0;
  while (griesmer(p, k, best + 1) <= n) ++best;
  r.max_d_allowed = best;
  if (r.g_of_d_plus_1 > n)
    r.classification = Optimality::Optimal;
  else if (r.g_of_d_plus_2 > n)
    r.classification = Optimality::AlmostOptimal;
  return r;
}

bool pless_check(const WeightEnumerator& we, std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  unsigned __int128 count = 0, moment = 0;
  for (const auto& [w, a] : we) {
    count += a;
    moment += static_cast<unsigned __int128>(w) * a;
  }
  unsigned __int128 pk = 1;
  for (std::uint64_t i = 0; i < k; ++i) pk *= p;
  if (count != pk) return false;
  if (k == 0) return moment == 0;
  return moment == pk / p * (p - 1) * n;
}

std::uint64_t minimum_distance(const WeightEnumerator& we) {
  for (const auto& [w, a] : we)
    if (w > 0 && a > 0) return w;
  return 0;
}

}  // namespace weilcodes
