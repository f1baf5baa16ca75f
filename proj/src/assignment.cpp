#include "graphdiff/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphdiff {

CostMatrix::CostMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("CostMatrix: negative dimension");
}

double assignment_cost(const CostMatrix& c, const std::vector<int>& rows) {
  double total = 0.0;
  for (int j = 0; j < static_cast<int>(rows.size()); ++j) total += c(rows[j], j);
  return total;
}

Assignment solve_rlap(const CostMatrix& c, WorkCounter* work) {
  const int n = c.cols();  // agents to place
  const int m = c.rows();  // slots
  if (n > m) throw std::invalid_argument("solve_rlap: more columns than rows");

  // Column-major copy: the inner loop scans all rows of one column.
  std::vector<double> cost(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = c(i, j);
      if (!std::isfinite(x)) throw std::invalid_argument("solve_rlap: non-finite cost");
      if (x < 0) throw std::invalid_argument("solve_rlap: negative cost");
      cost[static_cast<std::size_t>(j) * m + i] = x;
    }
  }
  if (work) work->record(m);

  Assignment out;
  if (n == 0) return out;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based; index 0 is the virtual start node of each augmenting path.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(m + 1, 0.0);
  std::vector<int> owner(m + 1, 0);  // owner[slot] = agent (1-based) or 0
  std::vector<int> way(m + 1, 0);
  std::vector<double> minv(m + 1);
  std::vector<char> used(m + 1);

  for (int agent = 1; agent <= n; ++agent) {
    owner[0] = agent;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = owner[j0];
      const double* row = &cost[static_cast<std::size_t>(i0 - 1) * m];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = row[j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const int j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  out.rows.assign(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (owner[j] != 0) out.rows[owner[j] - 1] = j - 1;
  }
  out.total_cost = assignment_cost(c, out.rows);
  return out;
}

}  // namespace graphdiff
