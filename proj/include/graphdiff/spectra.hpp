#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "graphdiff/graph.hpp"

namespace graphdiff {

// Eigenvalues of a Laplacian, sorted ascending. For L = A - D every value is
// <= 0 up to round-off.
class Spectrum {
 public:
  Spectrum() = default;
  // Sorts; throws std::invalid_argument on non-finite input.
  explicit Spectrum(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  double operator[](int i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<double> values_;
};

struct EigenDecomposition {
  Spectrum spectrum;
  // Column k is the unit eigenvector for spectrum[k].
  Eigen::MatrixXd vectors;
};

// Throws std::invalid_argument on non-finite entries.
EigenDecomposition decompose(const SymMatrix& m);

Spectrum laplacian_spectrum(const Graph& g);

// Analytic Laplacian spectra, used as oracles. Path: -2 + 2cos(pi k / n);
// Cycle: -2 + 2cos(2 pi k / n). Other families throw.
Spectrum closed_form_spectrum(LineageFamily family, int n);

// U exp(t Lambda) U^T.
SymMatrix heat_kernel(const EigenDecomposition& d, double t);

// ||exp(t L)||_F from the spectrum alone: sqrt(sum_k exp(2 t lambda_k)).
double heat_kernel_norm(const Spectrum& s, double t);

}  // namespace graphdiff
