#pragma once

#include "graphdiff/assignment.hpp"
#include "graphdiff/graph.hpp"
#include "graphdiff/spectra.hpp"

namespace graphdiff {

// sum_j min_i (l1_j / alpha - alpha l2_i)^2: every smaller-graph eigenvalue
// takes its nearest scaled partner, collisions allowed. Operands are ordered
// as for the distances.
double spectral_lower_bound(const Spectrum& a, const Spectrum& b, double alpha);
double spectral_lower_bound(const Graph& a, const Graph& b, double alpha);

// G1 = g1a x g1b and G2 = g2a x g2b (box products), with per-factor witness
// matchings from the smaller factor spectrum into the larger one.
struct ProductBoundInputs {
  Graph g1a, g1b, g2a, g2b;
  double t_c = 0.0;
  double alpha_c = 1.0;
  double lambda = 0.5;  // mixing weight in [0, 1]
  Assignment p1;        // witness for (g1a, g2a)
  Assignment p2;        // witness for (g1b, g2b)
};

// lambda (||e^{(t/a) L(g1b)}|| + ||e^{t a L(g2b)}||) D(g1a, g2a | p1)
//   + (1 - lambda) (||e^{(t/a) L(g1a)}|| + ||e^{t a L(g2a)}||) D(g1b, g2b | p2)
// with D(.|P) = sqrt(exp_cost) at (t_c, alpha_c). Each factor pair must be
// given smaller-first.
double product_upper_bound(const ProductBoundInputs& in);

// exp cost of the Kronecker witness p1 (x) p2 on the product pair, computed
// from factor spectra: sum over (j, l) of
// (e^{(t/a)(l1a_j + l1b_l)} - e^{t a (l2a_{p1 j} + l2b_{p2 l})})^2.
double kronecker_witness_cost(const ProductBoundInputs& in);

// How the two kernel norms combine in the bound for g1 x g1 versus g2 x g2.
// Sum is what the product bound gives with identical factors and witnesses;
// Min is the sharper form sometimes quoted, which can fall below the true
// distance (see the product-bound sweep).
enum class NormCombination { Min, Sum };

// N(||e^{(t/a) L(g1)}||, ||e^{t a L(g2)}||) D(g1, g2 | t_c, alpha_c), with the
// factor distance from an optimal matching at (t_c, alpha_c). Operands ordered.
double product_special_case_bound(const Graph& g1, const Graph& g2, double t_c, double alpha_c,
                                  NormCombination n = NormCombination::Min);
double product_special_case_bound(const Spectrum& s1, const Spectrum& s2, double t_c,
                                  double alpha_c, NormCombination n = NormCombination::Min);

// ||P e^{(t/a)L1} - e^{t a L2} P|| + ||e^{(t/a)L1} - e^{t L1}|| + ||e^{t L2} P - e^{t a L2} P||
// in the spectral basis, m mapping the smaller spectrum s1 into s2.
double regularized_objective(const Spectrum& s1, const Spectrum& s2, const Assignment& m,
                             double alpha, double t);

}  // namespace graphdiff
