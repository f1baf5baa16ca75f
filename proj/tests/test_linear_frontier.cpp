#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "graphdiff/linear_frontier.hpp"
#include "support.hpp"

using namespace graphdiff;
using oracle::pa2;
using oracle::pa3;

namespace {

Assignment match(std::vector<int> rows) { return Assignment{std::move(rows), 0.0}; }

double brute_linear(const Spectrum& s1, const Spectrum& s2, double alpha) {
  return oracle::brute_force_rlap(linear_cost_matrix(s1, s2, alpha)).cost;
}

void check_frontier_shape(const Frontier& f) {
  for (const auto& e : f.entries) {
    for (int j = 1; j < e.matching.size(); ++j) {
      CHECK(e.matching.rows[j - 1] < e.matching.rows[j]);
    }
  }
  for (std::size_t k = 1; k < f.entries.size(); ++k) {
    const auto& a = f.entries[k - 1].matching.rows;
    const auto& b = f.entries[k].matching.rows;
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] <= b[j]);
    CHECK(f.entries[k - 1].lo <= f.entries[k].lo);
  }
}

}  // namespace

TEST_CASE("lap at fixed alpha on Pa2/Pa3") {
  const Assignment a = lap_solve_linear(pa2(), pa3(), 1.0);
  CHECK(a.total_cost == 1.0);
  CHECK((a.rows == std::vector<int>{0, 2} || a.rows == std::vector<int>{1, 2}));

  const double root = std::sqrt(8.0 / 9.0);
  const Assignment b = lap_solve_linear(pa2(), pa3(), root);
  CHECK(b.rows == std::vector<int>{0, 2});
  CHECK(b.total_cost == doctest::Approx(0.5).epsilon(1e-14));
  // The other two monotone matchings at the same alpha.
  CHECK(linear_cost(match({0, 1}), pa2(), pa3(), root) == doctest::Approx(1.3888888888889));
  CHECK(linear_cost(match({1, 2}), pa2(), pa3(), root) == doctest::Approx(1.3888888888889));

  for (double alpha : oracle::log_grid(0.05, 20, 41)) {
    CHECK(lap_solve_linear(pa2(), pa3(), alpha).total_cost ==
          doctest::Approx(brute_linear(pa2(), pa3(), alpha)).epsilon(1e-12));
  }
}

TEST_CASE("identical spectra give the identity at alpha 1") {
  const Spectrum s = laplacian_spectrum(random_bernoulli_graph(9, 0.5, 4));
  const Assignment a = lap_solve_linear(s, s, 1.0);
  CHECK(a.total_cost == 0.0);
  for (int j = 0; j < a.size(); ++j) CHECK(a.rows[j] == j);
}

TEST_CASE("cost coefficients") {
  const CostCoeffs c1 = cost_coeffs(match({0, 1}), pa2(), pa3());
  CHECK(c1.A == 10.0);
  CHECK(c1.B == 4.0);
  CHECK(c1.C == 12.0);
  const CostCoeffs c2 = cost_coeffs(match({1, 2}), pa2(), pa3());
  CHECK(c2.A == 1.0);
  CHECK(c2.B == 4.0);
  CHECK(c2.C == 4.0);
  for (double a : {0.3, 1.0, 2.5}) {
    CHECK(c1(a) == doctest::Approx(linear_cost(match({0, 1}), pa2(), pa3(), a)));
  }
  const Spectrum zero({0.0, 0.0});
  const CostCoeffs z = cost_coeffs(match({0, 2}), zero, pa3());
  CHECK(z.B == 0.0);
  CHECK(z.C == 0.0);
}

TEST_CASE("crossing alpha") {
  const auto x = crossing_alpha({10, 4, 12}, {1, 4, 4});
  REQUIRE(x.has_value());
  CHECK(*x == doctest::Approx(std::sqrt(8.0 / 9.0)).epsilon(1e-14));
  // Bisection oracle on f1 - f2.
  const CostCoeffs c1{10, 4, 12}, c2{1, 4, 4};
  double lo = 0.1, hi = 3.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    ((c1(lo) - c2(lo)) * (c1(mid) - c2(mid)) <= 0 ? hi : lo) = mid;
  }
  CHECK(*x == doctest::Approx(lo).epsilon(1e-12));

  CHECK_FALSE(crossing_alpha({3, 1, 2}, {3, 1, 2}).has_value());
  CHECK_FALSE(crossing_alpha({3, 1, 2}, {3, 5, 2}).has_value());

  const auto y = crossing_alpha({2, 0, 3}, {1, 0, 2});
  REQUIRE(y.has_value());
  CHECK(*y == doctest::Approx(1.0));
  // No positive root when A and C move in opposite directions.
  CHECK_FALSE(crossing_alpha({2, 0, 2}, {1, 0, 3}).has_value());
}

TEST_CASE("canonicalization sorts the used rows") {
  Assignment a = match({2, 0, 5});
  canonicalize_matching(a);
  CHECK(a.rows == std::vector<int>{0, 2, 5});
}

TEST_CASE("merge of two disagreeing matchings") {
  WorkCounter w;
  const MergeResult r = merge_solutions(match({0, 1}), match({1, 2}), pa2(), pa3(), 0.5, 2.0, &w);
  CHECK(r.status == MergeStatus::New);
  REQUIRE(r.alpha_star.has_value());
  CHECK(*r.alpha_star == doctest::Approx(std::sqrt(8.0 / 9.0)));
  CHECK(r.matching.rows == std::vector<int>{0, 2});
  CHECK(linear_cost(r.matching, pa2(), pa3(), *r.alpha_star) == doctest::Approx(0.5));
  CHECK(w.calls == 1);

  const MergeResult same = merge_solutions(match({0, 2}), match({0, 2}), pa2(), pa3(), 0.5, 2.0);
  CHECK(same.status == MergeStatus::Closed);

  // The crossing lies outside [1, 2].
  const MergeResult out = merge_solutions(match({0, 1}), match({1, 2}), pa2(), pa3(), 1.0, 2.0);
  CHECK(out.status == MergeStatus::Closed);
}

TEST_CASE("resolve_disagreement keeps agreed pairs") {
  const Spectrum s1({-5, -3, -1, 0});
  const Spectrum s2({-6, -4, -3, -2, -1, 0});
  auto cost = [&](int i, int j) {
    const double d = s1[j] - s2[i];
    return d * d;
  };
  const Assignment r = resolve_disagreement(match({0, 1, 3, 5}), match({0, 2, 4, 5}), 6, cost);
  CHECK(r.rows[0] == 0);
  CHECK(r.rows[3] == 5);
  const auto best = oracle::brute_force_rlap(linear_cost_matrix(s1, s2, 1.0));
  CHECK(assignment_cost(linear_cost_matrix(s1, s2, 1.0), r.rows) == doctest::Approx(best.cost));
}

TEST_CASE("frontier on Pa2/Pa3 equals the grid oracle") {
  const Frontier f = linear_frontier(pa2(), pa3());
  REQUIRE_FALSE(f.entries.empty());
  bool has_zero_entry = false;
  for (const auto& e : f.entries) has_zero_entry |= e.matching.rows == std::vector<int>{0, 2};
  CHECK(has_zero_entry);
  // {0,1} is dominated by {0,2} everywhere: f01 = f02 + alpha^2.
  for (const auto& e : f.entries) CHECK(e.matching.rows != std::vector<int>{0, 1});
  for (double alpha : oracle::log_grid(1e-6, 10, 1000)) {
    const double expect = brute_linear(pa2(), pa3(), alpha);
    CHECK(f.envelope(pa2(), pa3(), alpha) ==
          doctest::Approx(expect).epsilon(1e-9).scale(std::max(1.0, expect)));
  }
  check_frontier_shape(f);
}

TEST_CASE("frontier on seeded random pairs equals the lap oracle") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Spectrum a = laplacian_spectrum(oracle::random_graph(derive_seed(seed, 1), 4, 9));
    const Spectrum b = laplacian_spectrum(oracle::random_graph(derive_seed(seed, 2), 9, 16));
    const Frontier f = linear_frontier(a, b);
    check_frontier_shape(f);
    for (double alpha : oracle::log_grid(1e-6, 10, 200)) {
      const double expect = lap_solve_linear(a, b, alpha).total_cost;
      CHECK(std::abs(f.envelope(a, b, alpha) - expect) <= 1e-9 * std::max(1.0, expect));
    }
    if (b.size() <= 7) {
      for (double alpha : oracle::log_grid(0.1, 5, 20)) {
        CHECK(f.envelope(a, b, alpha) == doctest::Approx(brute_linear(a, b, alpha)));
      }
    }
  }
}

TEST_CASE("frontier of identical graphs contains the identity") {
  const Spectrum s = laplacian_spectrum(lineage_member(LineageFamily::SquareGrid, 3));
  const Frontier f = linear_frontier(s, s);
  CHECK(f.envelope(s, s, 1.0) == doctest::Approx(0.0));
  CHECK(linear_distance(s, s).value == 0.0);
}

TEST_CASE("linear distance examples") {
  const DistanceResult r = linear_distance(pa2(), pa3());
  CHECK(r.squared == 0.0);
  CHECK(r.value == 0.0);
  REQUIRE(r.alpha_star.has_value());
  CHECK(*r.alpha_star == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(r.matching.rows == std::vector<int>{0, 2});

  // Proportional spectra: Cy_3 (-3,-3,0) against K_4 (-4,-4,-4,0).
  const DistanceResult k = linear_distance(cycle_graph(3), complete_graph(4));
  CHECK(k.squared == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));

  const Spectrum one({-1.0});
  const Spectrum zeros({0.0, 0.0});
  CHECK(linear_distance(zeros, zeros).value == 0.0);
  CHECK(linear_distance(one, pa3()).value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("linear distance is symmetric and ordered") {
  const Graph g = random_bernoulli_graph(12, 0.5, 1);
  const Graph h = random_bernoulli_graph(7, 0.5, 2);
  const DistanceResult gh = linear_distance(g, h);
  const DistanceResult hg = linear_distance(h, g);
  CHECK(gh.value == hg.value);
  CHECK(gh.swapped);
  CHECK_FALSE(hg.swapped);
}

TEST_CASE("fixed alpha linear distance") {
  const DistanceResult r = fixed_alpha_linear_distance(pa2(), pa3(), 1.0);
  CHECK(r.squared == 1.0);
  CHECK(r.value == 1.0);
  CHECK(fixed_alpha_linear_distance(pa2(), pa3(), std::sqrt(8.0 / 9.0)).squared ==
        doctest::Approx(0.5).epsilon(1e-14));
  const Graph g = cycle_graph(6);
  CHECK(fixed_alpha_linear_distance(g, g, 1.0).value == 0.0);
  CHECK(fixed_alpha_linear_distance(path_graph(2), path_graph(3), 1.0).squared ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("time-scaled distance") {
  const DistanceResult r0 = tsgdd(pa2(), pa3(), 0.0);
  CHECK(r0.squared == fixed_alpha_linear_distance(pa2(), pa3(), 1.0).squared);
  const DistanceResult r1 = tsgdd(pa2(), pa3(), 1.0);
  CHECK(r1.squared == doctest::Approx(brute_linear(pa2(), pa3(), 2.0 / 3.0) / 36.0));
  const Graph g = lineage_member(LineageFamily::MultiBarbell, 3);
  CHECK(tsgdd(g, g, 0.5).value == 0.0);
}
