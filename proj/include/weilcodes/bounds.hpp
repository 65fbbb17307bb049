#pragma once

// Griesmer bound and the first two Pless power moments.

#include "weilcodes/codes.hpp"

#include <cstdint>
#include <string>

namespace weilcodes {

enum class Optimality { Optimal, AlmostOptimal, Neither };

std::string to_string(Optimality o);

struct GriesmerReport {
  std::uint32_t p = 3;
  std::uint64_t n = 0, k = 0, d = 0;
  std::uint64_t g_of_d = 0;          // g(k, d)
  std::uint64_t g_of_d_plus_1 = 0;   // g(k, d+1)
  std::uint64_t g_of_d_plus_2 = 0;   // g(k, d+2)
  std::uint64_t max_d_allowed = 0;   // largest d' with g(k, d') <= n
  Optimality classification = Optimality::Neither;
};

/// sum_{i<k} ceil(d / p^i).
std::uint64_t griesmer(std::uint32_t p, std::uint64_t k, std::uint64_t d);

/// Optimal: no [n,k,d+1] code passes the bound. Almost optimal: d+1 passes, d+2 does not.
GriesmerReport classify(std::uint32_t p, std::uint64_t n, std::uint64_t k, std::uint64_t d);

/// sum A_j = p^k and sum j A_j = p^{k-1}(p-1)n.
bool pless_check(const WeightEnumerator& we, std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Smallest nonzero weight, or 0 when there is none.
std::uint64_t minimum_distance(const WeightEnumerator& we);

}  // namespace weilcodes
