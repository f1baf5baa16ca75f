#pragma once

#include <functional>
#include <optional>

namespace graphdiff {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

// Golden-section search for a minimum of f on [a, b]. Stops when the bracket
// is narrower than tol or after max_iter shrink steps.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                      double tol, int max_iter = 200);

// Same search on -f; the returned value is f at the maximizer.
ScalarMinimum golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                      double tol, int max_iter = 200);

// Brent's bounded minimizer (golden section with parabolic steps), the
// classic fminbound scheme. xatol is the absolute input tolerance.
ScalarMinimum brent_minimize(const std::function<double(double)>& f, double a, double b,
                             double xatol, int max_iter = 500);

// Root of f in [a, b] by bisection. Empty unless f(a) and f(b) have opposite
// signs (or one of them is exactly zero).
std::optional<double> bisect_root(const std::function<double(double)>& f, double a, double b,
                                  double tol, int max_iter = 200);

}  // namespace graphdiff
