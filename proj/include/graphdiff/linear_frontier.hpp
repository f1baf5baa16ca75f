#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "graphdiff/assignment.hpp"
#include "graphdiff/distance.hpp"
#include "graphdiff/graph.hpp"
#include "graphdiff/spectra.hpp"

namespace graphdiff {

// f_M(alpha) = B / alpha^2 + A alpha^2 - C for a matching M, where
// A = sum of squared matched larger-graph eigenvalues,
// B = sum of squared smaller-graph eigenvalues,
// C = 2 sum of the matched products.
struct CostCoeffs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  double operator()(double alpha) const { return B / (alpha * alpha) + A * alpha * alpha - C; }
};

// (lambda1_j / alpha - alpha lambda2_i)^2, rows i over s2 and columns j over s1.
CostMatrix linear_cost_matrix(const Spectrum& s1, const Spectrum& s2, double alpha);

// Direct sum of squares; agrees with cost_coeffs(...)(alpha) up to round-off
// but does not suffer from the cancellation in B/a^2 + A a^2 - C.
double linear_cost(const Assignment& m, const Spectrum& s1, const Spectrum& s2, double alpha);

// Requires s1.size() <= s2.size() and alpha > 0. The returned matching is
// uncrossed (strictly increasing), see canonicalize_matching.
Assignment lap_solve_linear(const Spectrum& s1, const Spectrum& s2, double alpha,
                            WorkCounter* work = nullptr);

CostCoeffs cost_coeffs(const Assignment& m, const Spectrum& s1, const Spectrum& s2);

// Positive alpha where the two cost curves meet, if any. Curves with
// |A1 - A2| <= 1e-12 max(A1, A2, 1) are treated as parallel.
std::optional<double> crossing_alpha(const CostCoeffs& c1, const CostCoeffs& c2);

// Reassigns the used rows in ascending order to ascending columns. For costs
// of the form c(i, j) = (a_j - b_i)^2 with a, b nondecreasing this never
// increases the total, so any optimal matching maps to an optimal increasing one.
void canonicalize_matching(Assignment& m);

// Re-solves the columns on which m1 and m2 disagree, holding the agreed pairs
// fixed. Candidate rows are the free rows between the smallest and largest
// row either matching uses on a disagreeing column; an optimal increasing
// matching at an intermediate alpha lies between m1 and m2 columnwise, so no
// optimum is lost. With split_blocks, disagreeing columns whose row intervals
// [min(m1_j, m2_j), max(m1_j, m2_j)] do not overlap are solved as separate,
// smaller problems; that relies on the same columnwise ordering and is only
// exact for the linear cost. cost(i, j) must be nonnegative. The result is
// canonical.
Assignment resolve_disagreement(const Assignment& m1, const Assignment& m2, int n2,
                                const std::function<double(int, int)>& cost,
                                WorkCounter* work = nullptr, bool split_blocks = false);

enum class MergeStatus { New, Closed };

struct MergeResult {
  Assignment matching;
  std::optional<double> alpha_star;
  MergeStatus status = MergeStatus::Closed;
};

// One refinement step between m1 (optimal at alpha1) and m2 (optimal at
// alpha2 > alpha1). Pairs on which both matchings agree are held fixed and
// the remaining columns are re-solved at the crossing alpha.
MergeResult merge_solutions(const Assignment& m1, const Assignment& m2, const Spectrum& s1,
                            const Spectrum& s2, double alpha1, double alpha2,
                            WorkCounter* work = nullptr);

struct FrontierEntry {
  Assignment matching;
  CostCoeffs coeffs;
  double alpha_opt = 0.0;  // +inf when A == 0
  double min_value = 0.0;  // clamped at 0
  double found_at = 0.0;   // alpha at which the matching was proven optimal
  // Sub-interval of the window on which this entry attains the lower envelope.
  double lo = 0.0;
  double hi = 0.0;
};

struct Frontier {
  AlphaWindow window;
  std::vector<FrontierEntry> entries;  // ordered by alpha
  WorkCounter work;

  // Pointwise minimum over entries, evaluated with direct sums.
  double envelope(const Spectrum& s1, const Spectrum& s2, double alpha) const;
};

FrontierEntry make_entry(Assignment m, const Spectrum& s1, const Spectrum& s2, double found_at);

// Exact lower envelope of all matching cost curves over the window. Requires
// s1.size() <= s2.size().
Frontier linear_frontier(const Spectrum& s1, const Spectrum& s2, AlphaWindow window = {});

// Operands are reordered as described in distance.hpp.
DistanceResult linear_distance(const Spectrum& a, const Spectrum& b, AlphaWindow window = {});
DistanceResult fixed_alpha_linear_distance(const Spectrum& a, const Spectrum& b, double alpha);
DistanceResult tsgdd(const Spectrum& a, const Spectrum& b, double r);

DistanceResult linear_distance(const Graph& a, const Graph& b, AlphaWindow window = {});
DistanceResult fixed_alpha_linear_distance(const Graph& a, const Graph& b, double alpha);
DistanceResult tsgdd(const Graph& a, const Graph& b, double r);

}  // namespace graphdiff
