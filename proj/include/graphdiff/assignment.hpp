#pragma once

#include <cstddef>
#include <vector>

namespace graphdiff {

// Dense rows x cols cost table, rows >= cols. In the distance code rows index
// the larger spectrum and columns the smaller one.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Injective map column -> row.
struct Assignment {
  std::vector<int> rows;  // rows[j] is the row assigned to column j
  double total_cost = 0.0;

  int size() const { return static_cast<int>(rows.size()); }
  // Index-level identity: same pairs, regardless of cost.
  bool same_pairs(const Assignment& other) const { return rows == other.rows; }
};

// Accumulated assignment-solver work. A solve whose zero-augmented square
// size is n costs n^3 units.
struct WorkCounter {
  double units = 0.0;
  std::size_t calls = 0;

  void record(int augmented_size) {
    const double n = augmented_size;
    units += n * n * n;
    ++calls;
  }
  WorkCounter& operator+=(const WorkCounter& o) {
    units += o.units;
    calls += o.calls;
    return *this;
  }
};

// Minimum-cost assignment of every column to a distinct row. Exact
// shortest-augmenting-path algorithm with dual potentials, equivalent to
// solving the zero-augmented rows x rows problem. Deterministic.
// Throws std::invalid_argument on non-finite or negative entries or when
// cols > rows.
Assignment solve_rlap(const CostMatrix& c, WorkCounter* work = nullptr);

// Sum of c(rows[j], j) in column order.
double assignment_cost(const CostMatrix& c, const std::vector<int>& rows);

}  // namespace graphdiff
