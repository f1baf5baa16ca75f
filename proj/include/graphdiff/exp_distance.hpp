#pragma once

#include <optional>
#include <vector>

#include "graphdiff/assignment.hpp"
#include "graphdiff/distance.hpp"
#include "graphdiff/graph.hpp"
#include "graphdiff/spectra.hpp"

namespace graphdiff {

// sum_j (exp((t/alpha) l1_j) - exp(alpha t l2_{m(j)}))^2. Larger-graph
// eigenvalues left unmatched contribute nothing.
double exp_cost(const Assignment& m, const Spectrum& s1, const Spectrum& s2, double alpha,
                double t);

CostMatrix exp_cost_matrix(const Spectrum& s1, const Spectrum& s2, double alpha, double t);

// Optimal eigen-matching for the exponential cost; canonical (increasing).
Assignment lap_solve_exponential(const Spectrum& s1, const Spectrum& s2, double alpha, double t,
                                 WorkCounter* work = nullptr);

struct AlphaMinimum {
  double alpha = 1.0;
  double value = 0.0;
};

// Bounded minimization of exp_cost over alpha in the window. A warm start, if
// given, adds a local search around it and the better result is kept.
AlphaMinimum minimize_alpha_for_matching(const Assignment& m, const Spectrum& s1,
                                         const Spectrum& s2, double t, AlphaWindow window = {},
                                         std::optional<double> warm = std::nullopt);

struct ExpEntry {
  Assignment matching;
  double alpha = 1.0;  // minimizing alpha at the frontier's current t
  double value = 0.0;  // exp_cost at that alpha
};

struct ExpFrontier {
  AlphaWindow window;
  double t = 0.0;
  // Every matching that was ever found optimal; only grows. Sorted by alpha.
  std::vector<ExpEntry> entries;
  WorkCounter work;

  // Smallest value over entries; entries must be minimized at t already.
  const ExpEntry* best() const;
};

// Seeds the retained set with the linear frontier at window-clamped optimal
// alphas and minimizes each at t.
ExpFrontier init_exp_frontier(const Spectrum& s1, const Spectrum& s2, double t,
                              AlphaWindow window = {});

// Moves the frontier to time t: re-minimizes alpha for every retained
// matching, then merges neighbours on the lower envelope until no new
// matching appears.
void t_step(ExpFrontier& f, const Spectrum& s1, const Spectrum& s2, double t);

struct ExpOptions {
  double t_init = 1e-3;
  double dt = 0.01;
  AlphaWindow window;
  // Scan all of [t_init, t_cap] instead of stopping at the first decrease.
  bool full_sweep = false;
  double t_cap = 20.0;
  double t_tol = 1e-8;
};

struct ExpCurvePoint {
  double t = 0.0;
  double value = 0.0;  // D^2(t)
  double alpha = 1.0;
};

// D^2(t) along a continuation through the given increasing times.
std::vector<ExpCurvePoint> exp_objective_curve(const Spectrum& a, const Spectrum& b,
                                               const std::vector<double>& times,
                                               const ExpOptions& opt = {});

DistanceResult exp_distance(const Spectrum& a, const Spectrum& b, const ExpOptions& opt = {});
DistanceResult exp_distance(const Graph& a, const Graph& b, const ExpOptions& opt = {});

// sup over t of the optimal exp cost at fixed alpha. Coarse logarithmic scan
// of t followed by golden-section refinement around each local maximum.
DistanceResult fixed_alpha_exp_distance(const Spectrum& a, const Spectrum& b, double alpha);

// ||exp(t L1) - exp(t L2)||_F^2 on full matrices; requires equal sizes.
class HammondCurve {
 public:
  HammondCurve(const Graph& g1, const Graph& g2);
  double operator()(double t) const;

 private:
  Eigen::VectorXd l1_;
  Eigen::VectorXd l2_;
  Eigen::MatrixXd overlap_;  // (U1^T U2)^2 entrywise
};

// sup_t of HammondCurve. Throws std::invalid_argument on unequal sizes.
DistanceResult hammond_distance(const Graph& g1, const Graph& g2);

}  // namespace graphdiff
