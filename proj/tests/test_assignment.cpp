#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphdiff/assignment.hpp"
#include "graphdiff/graph.hpp"
#include "support.hpp"

using namespace graphdiff;

TEST_CASE("trivial instances") {
  CostMatrix c(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) c(i, j) = i == j ? 0.0 : 1.0;
  }
  const Assignment a = solve_rlap(c);
  CHECK(a.rows == std::vector<int>{0, 1, 2});
  CHECK(a.total_cost == 0.0);

  CostMatrix one(1, 1);
  one(0, 0) = 5.0;
  const Assignment b = solve_rlap(one);
  CHECK(b.rows == std::vector<int>{0});
  CHECK(b.total_cost == 5.0);

  CHECK(solve_rlap(CostMatrix(4, 0)).rows.empty());
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(solve_rlap(CostMatrix(2, 3)), std::invalid_argument);
  CostMatrix neg(2, 2);
  neg(0, 0) = -1.0;
  CHECK_THROWS_AS(solve_rlap(neg), std::invalid_argument);
  CostMatrix bad(2, 2);
  bad(1, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(solve_rlap(bad), std::invalid_argument);
}

TEST_CASE("seeded 5x4 matches enumeration of 120 injections") {
  SplitMix64 rng(2024);
  CostMatrix c(5, 4);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 4; ++j) c(i, j) = rng.uniform();
  }
  CHECK(oracle::all_injections(4, 5).size() == 120);
  const auto best = oracle::brute_force_rlap(c);
  const Assignment a = solve_rlap(c);
  CHECK(a.total_cost == doctest::Approx(best.cost).epsilon(1e-14));
  CHECK(assignment_cost(c, a.rows) == a.total_cost);
}

TEST_CASE("exact equality with enumeration for every shape up to 7 rows") {
  // Small integer costs are exact in double and produce many ties.
  int cases = 0;
  for (int m = 1; m <= 7; ++m) {
    for (int n = 0; n <= m; ++n) {
      for (std::uint64_t rep = 0; rep < 12; ++rep) {
        SplitMix64 rng(derive_seed(static_cast<std::uint64_t>(m * 10 + n), rep));
        CostMatrix c(m, n);
        const int hi = rep % 2 ? 3 : 50;
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < n; ++j) c(i, j) = rng.uniform_int(0, hi);
        }
        const auto best = oracle::brute_force_rlap(c);
        const Assignment a = solve_rlap(c);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(a.total_cost == (n == 0 ? 0.0 : best.cost));
        CHECK(assignment_cost(c, a.rows) == a.total_cost);
        std::vector<char> seen(m, 0);
        for (int r : a.rows) {
          REQUIRE((r >= 0 && r < m));
          CHECK_FALSE(seen[r]);
          seen[r] = 1;
        }
        ++cases;
      }
    }
  }
  CHECK(cases == 12 * 35);
}

TEST_CASE("work counter") {
  WorkCounter w;
  CostMatrix c(5, 3);
  solve_rlap(c, &w);
  solve_rlap(c, &w);
  CHECK(w.calls == 2);
  CHECK(w.units == 2 * 125.0);
  WorkCounter v;
  v += w;
  CHECK(v.units == w.units);
}
