#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "graphdiff/scalar_search.hpp"

using namespace graphdiff;

TEST_CASE("golden section") {
  const auto m = golden_section_minimize([](double x) { return (x - 1.3) * (x - 1.3); }, 0, 4, 1e-10);
  CHECK(m.x == doctest::Approx(1.3).epsilon(1e-8));
  CHECK(m.value < 1e-16);

  const auto edge = golden_section_minimize([](double x) { return x; }, 2, 5, 1e-10);
  CHECK(edge.x == doctest::Approx(2.0).epsilon(1e-8));

  const auto mx = golden_section_maximize([](double x) { return std::sin(x); }, 0, 3, 1e-10);
  CHECK(mx.x == doctest::Approx(M_PI / 2).epsilon(1e-8));
  CHECK(mx.value == doctest::Approx(1.0));
}

TEST_CASE("brent") {
  const auto m = brent_minimize([](double x) { return std::cosh(x - 0.25); }, -3, 2, 1e-12);
  CHECK(m.x == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m.evaluations < 60);

  const auto edge = brent_minimize([](double x) { return -x; }, 0, 1, 1e-12);
  CHECK(edge.x == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("bisection") {
  const auto r = bisect_root([](double x) { return x * x - 2; }, 0, 3, 1e-14);
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK_FALSE(bisect_root([](double x) { return x * x + 1; }, -1, 1, 1e-12).has_value());
}
