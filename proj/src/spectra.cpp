#include "graphdiff/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphdiff {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Spectrum: non-finite eigenvalue");
  }
  std::sort(values_.begin(), values_.end());
}

EigenDecomposition decompose(const SymMatrix& m) {
  const auto& a = m.dense();
  if (!a.allFinite()) throw std::invalid_argument("decompose: non-finite entry");
  if (a.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("decompose: eigensolver did not converge");
  }
  // Eigen returns eigenvalues in increasing order already.
  const auto& ev = solver.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  EigenDecomposition out;
  out.spectrum = Spectrum(std::move(values));
  out.vectors = solver.eigenvectors();
  return out;
}

Spectrum laplacian_spectrum(const Graph& g) {
  if (g.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g).dense(),
                                                        Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

Spectrum closed_form_spectrum(LineageFamily family, int n) {
  if (n < 2) throw std::invalid_argument("closed_form_spectrum: n must be >= 2");
  std::vector<double> values(n);
  const double pi = std::numbers::pi;
  switch (family) {
    case LineageFamily::Path:
      for (int k = 0; k < n; ++k) values[k] = -2.0 + 2.0 * std::cos(pi * k / n);
      break;
    case LineageFamily::Cycle:
      for (int k = 0; k < n; ++k) values[k] = -2.0 + 2.0 * std::cos(2.0 * pi * k / n);
      break;
    default:
      throw std::invalid_argument("closed_form_spectrum: only path and cycle are supported");
  }
  return Spectrum(std::move(values));
}

SymMatrix heat_kernel(const EigenDecomposition& d, double t) {
  if (t < 0) throw std::invalid_argument("heat_kernel: t must be >= 0");
  const int n = d.spectrum.size();
  Eigen::VectorXd scale(n);
  for (int k = 0; k < n; ++k) scale[k] = std::exp(t * d.spectrum[k]);
  Eigen::MatrixXd k = d.vectors * scale.asDiagonal() * d.vectors.transpose();
  // Symmetrize explicitly; the product is symmetric only up to round-off.
  Eigen::MatrixXd sym = 0.5 * (k + k.transpose());
  return SymMatrix::from_dense(std::move(sym));
}

double heat_kernel_norm(const Spectrum& s, double t) {
  double sum = 0.0;
  for (double v : s.values()) sum += std::exp(2.0 * t * v);
  return std::sqrt(sum);
}

}  // namespace graphdiff
