#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "frechproj/geometry.hpp"

namespace frechproj {

// Grid coordinates are 1-based everywhere in the public API: (i, j) pairs
// vertex i of the first curve with vertex j of the second.
struct GridPair {
  std::size_t i = 0;
  std::size_t j = 0;

  friend auto operator<=>(const GridPair&, const GridPair&) = default;
};

// Dense rows x cols matrix with 1-based accessors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }
  double at(std::size_t i, std::size_t j) const { return data_[(i - 1) * cols_ + (j - 1)]; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// delta(i, j) = dist(P_i, Q_j).  Curves must share a dimension.
Matrix pairwise_distances(const Curve& P, const Curve& Q);

// A coupled traversal of two curves: starts at (1,1), ends at (rows, cols),
// and each step advances i, j, or both by exactly 1.
struct Traversal {
  std::vector<GridPair> steps;
};

bool is_monotone_traversal(const Traversal& T, std::size_t rows, std::size_t cols);

// Cost of a fixed traversal on a distance matrix: the bottleneck (max entry)
// and the sum of entries accumulated in path order.
double traversal_cost_max(const Matrix& delta, const Traversal& T);
double traversal_cost_sum(const Matrix& delta, const Traversal& T);

// Dynamic programs over an explicit distance matrix.  The table variants
// return the full DP table; the value variants use a rolling row but evaluate
// the identical per-cell expression, so both agree bit-for-bit.
Matrix frechet_table(const Matrix& delta);
Matrix dtw_table(const Matrix& delta);

// min over monotone traversals of the max entry (discrete Frechet distance
// when delta holds pairwise vertex distances).
double min_max_traversal_value(const Matrix& delta);
// min over monotone traversals of the entry sum (dynamic time warping).
double min_sum_traversal_value(const Matrix& delta);

struct MetricResult {
  double value = 0.0;
  Traversal witness;  // an optimal traversal attaining value
};

// Witness extraction backtracks the DP table; among optimal predecessors it
// prefers the diagonal step, then the vertical, then the horizontal.
MetricResult min_max_traversal(const Matrix& delta);
MetricResult min_sum_traversal(const Matrix& delta);

double discrete_frechet(const Curve& P, const Curve& Q);
double dtw(const Curve& P, const Curve& Q);
MetricResult discrete_frechet_with_witness(const Curve& P, const Curve& Q);
MetricResult dtw_with_witness(const Curve& P, const Curve& Q);

// Free-space indicator: 1.0 where delta(i,j) < threshold (strictly), else 0.0.
Matrix free_space_matrix(const Matrix& delta, double threshold);

// True when (rows, cols) is reachable from (1, 1) through cells with
// delta < threshold via steps (i,j) -> (i+1,j), (i,j+1), (i+1,j+1).
bool traversable_below(const Matrix& delta, double threshold);

}  // namespace frechproj
