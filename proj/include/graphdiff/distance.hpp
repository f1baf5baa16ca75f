#pragma once

#include <optional>
#include <string_view>

#include "graphdiff/assignment.hpp"
#include "graphdiff/spectra.hpp"

namespace graphdiff {

enum class Variant { LinearFree, LinearFixedAlpha, TSGDD, ExpFree, ExpFixedAlpha, Hammond };

std::string_view to_string(Variant v);

struct AlphaWindow {
  double low = 1e-6;
  double high = 10.0;
};

struct DistanceResult {
  Variant variant = Variant::LinearFree;
  double value = 0.0;    // D, the square root of the optimized objective
  double squared = 0.0;  // the objective itself
  // Empty means alpha = +inf (all matched larger-graph eigenvalues are zero).
  std::optional<double> alpha_star;
  std::optional<double> t_star;
  // Smaller-graph eigen-index -> larger-graph eigen-index.
  Assignment matching;
  WorkCounter work;
  // True when the caller's first operand was the larger one.
  bool swapped = false;
};

// Distances are directed from the smaller graph to the larger one. The pair is
// reordered so that first.size() <= second.size(); equal sizes are ordered
// lexicographically by spectrum, which makes every distance exactly symmetric.
struct OrderedSpectra {
  const Spectrum* small = nullptr;
  const Spectrum* large = nullptr;
  bool swapped = false;
};

OrderedSpectra order_operands(const Spectrum& a, const Spectrum& b);

}  // namespace graphdiff
