#include "graphdiff/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "graphdiff/distance.hpp"
#include "graphdiff/exp_distance.hpp"

namespace graphdiff {

double spectral_lower_bound(const Spectrum& a, const Spectrum& b, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("spectral_lower_bound: alpha must be positive");
  const auto ord = order_operands(a, b);
  const auto s2 = ord.large->values();
  if (s2.empty()) return 0.0;
  double total = 0.0;
  for (double l1 : ord.small->values()) {
    // Nearest alpha * l2 to l1 / alpha, i.e. nearest l2 to l1 / alpha^2.
    const double target = l1 / (alpha * alpha);
    auto it = std::lower_bound(s2.begin(), s2.end(), target);
    double best = std::numeric_limits<double>::infinity();
    for (auto c : {it, it == s2.begin() ? it : it - 1}) {
      if (c == s2.end()) continue;
      const double d = l1 / alpha - alpha * *c;
      best = std::min(best, d * d);
    }
    total += best;
  }
  return total;
}

double spectral_lower_bound(const Graph& a, const Graph& b, double alpha) {
  return spectral_lower_bound(laplacian_spectrum(a), laplacian_spectrum(b), alpha);
}

double product_upper_bound(const ProductBoundInputs& in) {
  if (in.lambda < 0 || in.lambda > 1) throw std::invalid_argument("lambda must lie in [0, 1]");
  const Spectrum s1a = laplacian_spectrum(in.g1a), s1b = laplacian_spectrum(in.g1b);
  const Spectrum s2a = laplacian_spectrum(in.g2a), s2b = laplacian_spectrum(in.g2b);
  const double t = in.t_c, a = in.alpha_c;
  const double d1 = std::sqrt(exp_cost(in.p1, s1a, s2a, a, t));
  const double d2 = std::sqrt(exp_cost(in.p2, s1b, s2b, a, t));
  const double n_b = heat_kernel_norm(s1b, t / a) + heat_kernel_norm(s2b, t * a);
  const double n_a = heat_kernel_norm(s1a, t / a) + heat_kernel_norm(s2a, t * a);
  return in.lambda * n_b * d1 + (1.0 - in.lambda) * n_a * d2;
}

double kronecker_witness_cost(const ProductBoundInputs& in) {
  const Spectrum s1a = laplacian_spectrum(in.g1a), s1b = laplacian_spectrum(in.g1b);
  const Spectrum s2a = laplacian_spectrum(in.g2a), s2b = laplacian_spectrum(in.g2b);
  const double t = in.t_c, a = in.alpha_c;
  double total = 0.0;
  for (int j = 0; j < in.p1.size(); ++j) {
    for (int l = 0; l < in.p2.size(); ++l) {
      const double x = std::exp((t / a) * (s1a[j] + s1b[l]));
      const double y = std::exp(t * a * (s2a[in.p1.rows[j]] + s2b[in.p2.rows[l]]));
      total += (x - y) * (x - y);
    }
  }
  return total;
}

double product_special_case_bound(const Spectrum& a, const Spectrum& b, double t_c,
                                  double alpha_c, NormCombination n) {
  const auto ord = order_operands(a, b);
  const Spectrum& s1 = *ord.small;
  const Spectrum& s2 = *ord.large;
  if (s1.empty()) return 0.0;
  const Assignment m = lap_solve_exponential(s1, s2, alpha_c, t_c);
  const double k1 = heat_kernel_norm(s1, t_c / alpha_c);
  const double k2 = heat_kernel_norm(s2, t_c * alpha_c);
  const double norm = n == NormCombination::Min ? std::min(k1, k2) : k1 + k2;
  return norm * std::sqrt(m.total_cost);
}

double product_special_case_bound(const Graph& g1, const Graph& g2, double t_c, double alpha_c,
                                  NormCombination n) {
  return product_special_case_bound(laplacian_spectrum(g1), laplacian_spectrum(g2), t_c, alpha_c,
                                    n);
}

double regularized_objective(const Spectrum& s1, const Spectrum& s2, const Assignment& m,
                             double alpha, double t) {
  double fit = 0.0, left = 0.0, right = 0.0;
  for (int j = 0; j < m.size(); ++j) {
    const double l1 = s1[j];
    const double l2 = s2[m.rows[j]];
    const double a = std::exp((t / alpha) * l1) - std::exp(alpha * t * l2);
    const double b = std::exp((t / alpha) * l1) - std::exp(t * l1);
    const double c = std::exp(t * l2) - std::exp(alpha * t * l2);
    fit += a * a;
    left += b * b;
    right += c * c;
  }
  return std::sqrt(fit) + std::sqrt(left) + std::sqrt(right);
}

}  // namespace graphdiff
