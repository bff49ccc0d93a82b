#include "frechproj/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace frechproj {

namespace {

double min3(double a, double b, double c) {
  return std::min(a, std::min(b, c));
}

void check_nonempty(const Matrix& m, const char* who) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument(std::string(who) + ": empty matrix");
}

}  // namespace

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix pairwise_distances(const Curve& P, const Curve& Q) {
  validate_curve(P);
  validate_curve(Q);
  if (P.dim() != Q.dim())
    throw std::invalid_argument("pairwise_distances: dimension mismatch");
  Matrix delta(P.size(), Q.size());
  for (std::size_t i = 1; i <= P.size(); ++i)
    for (std::size_t j = 1; j <= Q.size(); ++j)
      delta.at(i, j) = dist(P.vertex(i), Q.vertex(j));
  return delta;
}

bool is_monotone_traversal(const Traversal& T, std::size_t rows, std::size_t cols) {
  if (T.steps.empty()) return false;
  if (T.steps.front() != GridPair{1, 1}) return false;
  if (T.steps.back() != GridPair{rows, cols}) return false;
  for (std::size_t k = 1; k < T.steps.size(); ++k) {
    const auto& a = T.steps[k - 1];
    const auto& b = T.steps[k];
    const std::size_t di = b.i - a.i, dj = b.j - a.j;
    if (b.i < a.i || b.j < a.j || di > 1 || dj > 1 || (di == 0 && dj == 0))
      return false;
  }
  return true;
}

double traversal_cost_max(const Matrix& delta, const Traversal& T) {
  double m = delta.at(T.steps.front().i, T.steps.front().j);
  for (std::size_t k = 1; k < T.steps.size(); ++k)
    m = std::max(m, delta.at(T.steps[k].i, T.steps[k].j));
  return m;
}

double traversal_cost_sum(const Matrix& delta, const Traversal& T) {
  double s = delta.at(T.steps.front().i, T.steps.front().j);
  for (std::size_t k = 1; k < T.steps.size(); ++k)
    s = s + delta.at(T.steps[k].i, T.steps[k].j);
  return s;
}

namespace {

enum class Mode { kMax, kSum };

// Shared DP cell update: combine the local entry with the best predecessor.
double combine(Mode mode, double entry, double best) {
  return mode == Mode::kMax ? std::max(entry, best) : entry + best;
}

Matrix dp_table(const Matrix& delta, Mode mode) {
  check_nonempty(delta, "dp_table");
  const std::size_t R = delta.rows(), C = delta.cols();
  Matrix T(R, C);
  T.at(1, 1) = delta.at(1, 1);
  for (std::size_t j = 2; j <= C; ++j)
    T.at(1, j) = combine(mode, delta.at(1, j), T.at(1, j - 1));
  for (std::size_t i = 2; i <= R; ++i) {
    T.at(i, 1) = combine(mode, delta.at(i, 1), T.at(i - 1, 1));
    for (std::size_t j = 2; j <= C; ++j)
      T.at(i, j) = combine(mode, delta.at(i, j),
                           min3(T.at(i - 1, j), T.at(i, j - 1), T.at(i - 1, j - 1)));
  }
  return T;
}

double dp_value(const Matrix& delta, Mode mode) {
  check_nonempty(delta, "dp_value");
  const std::size_t R = delta.rows(), C = delta.cols();
  std::vector<double> prev(C), cur(C);
  cur[0] = delta.at(1, 1);
  for (std::size_t j = 2; j <= C; ++j)
    cur[j - 1] = combine(mode, delta.at(1, j), cur[j - 2]);
  for (std::size_t i = 2; i <= R; ++i) {
    std::swap(prev, cur);
    cur[0] = combine(mode, delta.at(i, 1), prev[0]);
    for (std::size_t j = 2; j <= C; ++j)
      cur[j - 1] = combine(mode, delta.at(i, j),
                           min3(prev[j - 1], cur[j - 2], prev[j - 2]));
  }
  return cur[C - 1];
}

MetricResult dp_with_witness(const Matrix& delta, Mode mode) {
  const Matrix T = dp_table(delta, mode);
  const std::size_t R = delta.rows(), C = delta.cols();
  MetricResult res;
  res.value = T.at(R, C);
  std::vector<GridPair> rev;
  std::size_t i = R, j = C;
  rev.push_back({i, j});
  while (i != 1 || j != 1) {
    if (i == 1) {
      --j;
    } else if (j == 1) {
      --i;
    } else {
      const double diag = T.at(i - 1, j - 1);
      const double up = T.at(i - 1, j);
      const double left = T.at(i, j - 1);
      const double best = min3(up, left, diag);
      if (diag == best) {
        --i; --j;
      } else if (up == best) {
        --i;
      } else {
        --j;
      }
    }
    rev.push_back({i, j});
  }
  res.witness.steps.assign(rev.rbegin(), rev.rend());
  return res;
}

}  // namespace

Matrix frechet_table(const Matrix& delta) { return dp_table(delta, Mode::kMax); }
Matrix dtw_table(const Matrix& delta) { return dp_table(delta, Mode::kSum); }

double min_max_traversal_value(const Matrix& delta) { return dp_value(delta, Mode::kMax); }
double min_sum_traversal_value(const Matrix& delta) { return dp_value(delta, Mode::kSum); }

MetricResult min_max_traversal(const Matrix& delta) { return dp_with_witness(delta, Mode::kMax); }
MetricResult min_sum_traversal(const Matrix& delta) { return dp_with_witness(delta, Mode::kSum); }

double discrete_frechet(const Curve& P, const Curve& Q) {
  return min_max_traversal_value(pairwise_distances(P, Q));
}

double dtw(const Curve& P, const Curve& Q) {
  return min_sum_traversal_value(pairwise_distances(P, Q));
}

MetricResult discrete_frechet_with_witness(const Curve& P, const Curve& Q) {
  return min_max_traversal(pairwise_distances(P, Q));
}

MetricResult dtw_with_witness(const Curve& P, const Curve& Q) {
  return min_sum_traversal(pairwise_distances(P, Q));
}

Matrix free_space_matrix(const Matrix& delta, double threshold) {
  check_nonempty(delta, "free_space_matrix");
  Matrix phi(delta.rows(), delta.cols());
  for (std::size_t i = 1; i <= delta.rows(); ++i)
    for (std::size_t j = 1; j <= delta.cols(); ++j)
      phi.at(i, j) = delta.at(i, j) < threshold ? 1.0 : 0.0;
  return phi;
}

bool traversable_below(const Matrix& delta, double threshold) {
  check_nonempty(delta, "traversable_below");
  const std::size_t R = delta.rows(), C = delta.cols();
  // Forward edges only, so a row-major reachability scan suffices.
  std::vector<char> reach(R * C, 0);
  auto idx = [C](std::size_t i, std::size_t j) { return (i - 1) * C + (j - 1); };
  for (std::size_t i = 1; i <= R; ++i) {
    for (std::size_t j = 1; j <= C; ++j) {
      if (!(delta.at(i, j) < threshold)) continue;
      if (i == 1 && j == 1) {
        reach[idx(i, j)] = 1;
        continue;
      }
      const bool from_up = i > 1 && reach[idx(i - 1, j)];
      const bool from_left = j > 1 && reach[idx(i, j - 1)];
      const bool from_diag = i > 1 && j > 1 && reach[idx(i - 1, j - 1)];
      reach[idx(i, j)] = from_up || from_left || from_diag;
    }
  }
  return reach[idx(R, C)] != 0;
}

}  // namespace frechproj
