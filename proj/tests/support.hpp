#pragma once

// Brute-force oracles and small helpers shared by the test executables.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "graphdiff/assignment.hpp"
#include "graphdiff/graph.hpp"
#include "graphdiff/spectra.hpp"

namespace oracle {

struct Best {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<int> rows;
};

// Exhaustive minimum over every injective column -> row map.
inline Best brute_force_rlap(const graphdiff::CostMatrix& c) {
  const int n = c.cols(), m = c.rows();
  Best best;
  std::vector<int> rows(n, -1);
  std::vector<char> used(m, 0);
  std::function<void(int, double)> go = [&](int j, double acc) {
    if (j == n) {
      if (acc < best.cost) {
        best.cost = acc;
        best.rows = rows;
      }
      return;
    }
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      rows[j] = i;
      go(j + 1, acc + c(i, j));
      used[i] = 0;
    }
  };
  go(0, 0.0);
  return best;
}

// Every injective map, for tests that need the full list.
inline std::vector<std::vector<int>> all_injections(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> rows(n);
  std::vector<char> used(m, 0);
  std::function<void(int)> go = [&](int j) {
    if (j == n) {
      out.push_back(rows);
      return;
    }
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      rows[j] = i;
      go(j + 1);
      used[i] = 0;
    }
  };
  go(0);
  return out;
}

inline std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int k = 0; k < points; ++k) {
    g[k] = lo * std::pow(hi / lo, static_cast<double>(k) / (points - 1));
  }
  return g;
}

// Random graph of the census size scheme, small end.
inline graphdiff::Graph random_graph(std::uint64_t seed, int n_lo, int n_hi) {
  graphdiff::SplitMix64 rng(seed);
  const int n = rng.uniform_int(n_lo, n_hi);
  const double ps[] = {0.25, 0.5, 0.75};
  return graphdiff::random_bernoulli_graph(n, ps[rng.uniform_int(0, 2)], rng.next());
}

inline const graphdiff::Spectrum& pa2() {
  static const graphdiff::Spectrum s({-2.0, 0.0});
  return s;
}

inline const graphdiff::Spectrum& pa3() {
  static const graphdiff::Spectrum s({-3.0, -1.0, 0.0});
  return s;
}

}  // namespace oracle
