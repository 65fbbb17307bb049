#include <doctest.h>

#include "weilcodes/bounds.hpp"

#include <random>

using namespace weilcodes;

TEST_CASE("griesmer sums") {
  CHECK(griesmer(3, 4, 12) == 19);
  CHECK(griesmer(3, 4, 13) == 21);
  CHECK(griesmer(3, 1, 17) == 17);
  CHECK(griesmer(3, 6, 73) == 112);
  CHECK(griesmer(5, 3, 1) == 3);
  for (std::uint64_t k = 1; k < 8; ++k) CHECK(griesmer(3, k, 1) == k);
}

TEST_CASE("griesmer is monotone") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::uint64_t> dk(1, 10), dd(1, 3000);
  for (int i = 0; i < 500; ++i) {
    const auto k = dk(rng), d = dd(rng);
    for (std::uint32_t p : {3u, 5u, 7u}) {
      CHECK(griesmer(p, k, d) <= griesmer(p, k, d + 1));
      CHECK(griesmer(p, k, d) <= griesmer(p, k + 1, d));
    }
  }
}

TEST_CASE("classification") {
  for (auto [n, k, d] : {std::tuple{20, 4, 12}, {16, 4, 9}, {10, 4, 6}, {15, 4, 9}, {126, 6, 81}})
    CHECK(classify(3, n, k, d).classification == Optimality::Optimal);
  for (auto [n, k, d] : {std::tuple{30, 4, 18}, {45, 5, 27}, {12, 4, 6}})
    CHECK(classify(3, n, k, d).classification == Optimality::AlmostOptimal);
  CHECK(classify(3, 80, 5, 48).classification == Optimality::Neither);

  const auto g = classify(3, 30, 4, 18);
  CHECK(g.g_of_d_plus_1 == 30);
  CHECK(g.g_of_d_plus_2 == 31);  // 20 + 7 + 3 + 1
  CHECK(g.max_d_allowed == 19);

  // published as optimal; d = 73 is not excluded at n = 112
  const auto h = classify(3, 112, 6, 72);
  CHECK(h.classification == Optimality::AlmostOptimal);
  CHECK(h.g_of_d_plus_1 == 112);
  CHECK(h.max_d_allowed == 73);
}

TEST_CASE("labels are exclusive and consistent with max_d_allowed") {
  for (std::uint64_t n = 1; n < 60; ++n)
    for (std::uint64_t k = 1; k < 6; ++k)
      for (std::uint64_t d = 1; d <= n; ++d) {
        const auto g = classify(3, n, k, d);
        if (g.g_of_d > n) continue;
        if (g.classification == Optimality::Optimal) CHECK(d == g.max_d_allowed);
        if (g.classification == Optimality::AlmostOptimal) CHECK(d + 1 == g.max_d_allowed);
        if (g.classification == Optimality::Neither) CHECK(d + 2 <= g.max_d_allowed);
      }
}

TEST_CASE("pless moments") {
  const WeightEnumerator we{{0, 1}, {12, 60}, {18, 20}};
  CHECK(pless_check(we, 20, 4, 3));
  CHECK_FALSE(pless_check(WeightEnumerator{{0, 1}, {12, 61}, {18, 20}}, 20, 4, 3));
  CHECK_FALSE(pless_check(we, 21, 4, 3));
  CHECK(pless_check(WeightEnumerator{{0, 1}}, 7, 0, 3));
  CHECK(minimum_distance(we) == 12);
  CHECK(minimum_distance(WeightEnumerator{{0, 1}}) == 0);
  CHECK(to_string(Optimality::AlmostOptimal) == "almost-optimal");
}
