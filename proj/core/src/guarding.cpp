#include "frechproj/guarding.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "frechproj/packing.hpp"

namespace frechproj {

namespace {

void check_members_in_grid(std::size_t rows, std::size_t cols, const CellSet& B,
                           const char* who) {
  for (const GridPair& m : B)
    if (m.i < 1 || m.i > rows || m.j < 1 || m.j > cols)
      throw std::invalid_argument(std::string(who) + ": member outside the grid");
}

// Cells reachable from (1,1) through non-members via forward steps
// (i+1,j), (i,j+1), (i+1,j+1); flat row-major mask (cell (i,j) at
// (i-1)*cols + j-1).
std::vector<char> start_mask(std::size_t rows, std::size_t cols, const CellSet& B) {
  std::vector<char> mask(rows * cols, 0);
  if (B.count({1, 1})) return mask;
  auto idx = [cols](std::size_t i, std::size_t j) { return (i - 1) * cols + (j - 1); };
  std::deque<GridPair> queue;
  mask[idx(1, 1)] = 1;
  queue.push_back({1, 1});
  const std::size_t fwd[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  while (!queue.empty()) {
    const GridPair c = queue.front();
    queue.pop_front();
    for (const auto& d : fwd) {
      const std::size_t ni = c.i + d[0], nj = c.j + d[1];
      if (ni > rows || nj > cols) continue;
      if (mask[idx(ni, nj)]) continue;
      if (B.count({ni, nj})) continue;
      mask[idx(ni, nj)] = 1;
      queue.push_back({ni, nj});
    }
  }
  return mask;
}

}  // namespace

CellSet build_guarding(const Matrix& delta, double delta_value, double theta) {
  if (delta.rows() == 0 || delta.cols() == 0)
    throw std::invalid_argument("build_guarding: empty matrix");
  if (!(theta >= 1.0))
    throw std::invalid_argument("build_guarding: theta must be >= 1");
  if (min_max_traversal_value(delta) != delta_value)
    throw std::invalid_argument(
        "build_guarding: delta_value is not the min-max traversal value of the matrix");
  const double thr = delta_value / theta;

  CellSet B;
  if (!(delta.at(1, 1) < thr)) {
    B.insert({1, 1});
    return B;
  }
  const std::size_t rows = delta.rows(), cols = delta.cols();
  auto idx = [cols](std::size_t i, std::size_t j) { return (i - 1) * cols + (j - 1); };
  std::vector<char> seen(rows * cols, 0);
  std::deque<GridPair> queue;
  seen[idx(1, 1)] = 1;
  queue.push_back({1, 1});
  const std::size_t fwd[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  while (!queue.empty()) {
    const GridPair c = queue.front();
    queue.pop_front();
    for (const auto& d : fwd) {
      const std::size_t ni = c.i + d[0], nj = c.j + d[1];
      if (ni > rows || nj > cols) continue;
      if (delta.at(ni, nj) < thr) {
        if (!seen[idx(ni, nj)]) {
          seen[idx(ni, nj)] = 1;
          queue.push_back({ni, nj});
        }
      } else {
        B.insert({ni, nj});
      }
    }
  }
  return B;
}

Partition partition_cells(std::size_t rows, std::size_t cols, const CellSet& B) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("partition_cells: empty grid");
  check_members_in_grid(rows, cols, B, "partition_cells");
  Partition P;
  P.guard = B;
  const auto mask = start_mask(rows, cols, B);
  auto idx = [cols](std::size_t i, std::size_t j) { return (i - 1) * cols + (j - 1); };
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) {
      if (mask[idx(i, j)])
        P.start.insert({i, j});
      else if (!B.count({i, j}))
        P.halt.insert({i, j});
    }
  return P;
}

std::vector<GridPair> find_avoidable(std::size_t rows, std::size_t cols,
                                     const CellSet& B) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("find_avoidable: empty grid");
  check_members_in_grid(rows, cols, B, "find_avoidable");
  if (B.empty()) return {};
  const auto start = start_mask(rows, cols, B);
  auto idx = [cols](std::size_t i, std::size_t j) { return (i - 1) * cols + (j - 1); };

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<char> visited(rows * cols);
  std::vector<std::size_t> min_col(rows + 1), max_col(rows + 1);
  std::vector<std::size_t> min_row(cols + 1), max_row(cols + 1);
  CellSet avoidable;

  for (const GridPair& target : B) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(min_col.begin(), min_col.end(), kNone);
    std::fill(max_col.begin(), max_col.end(), std::size_t{0});
    std::fill(min_row.begin(), min_row.end(), kNone);
    std::fill(max_row.begin(), max_row.end(), std::size_t{0});

    // Start-region cells that reach the target through start-region cells,
    // found by walking predecessor steps (x-1,y), (x,y-1), (x-1,y-1).
    std::deque<GridPair> queue;
    auto push_preds = [&](const GridPair& c) {
      const std::size_t px[3] = {c.i - 1, c.i, c.i - 1};
      const std::size_t py[3] = {c.j, c.j - 1, c.j - 1};
      for (int k = 0; k < 3; ++k) {
        if (px[k] < 1 || py[k] < 1) continue;
        if (visited[idx(px[k], py[k])]) continue;
        if (!start[idx(px[k], py[k])]) continue;
        visited[idx(px[k], py[k])] = 1;
        queue.push_back({px[k], py[k]});
      }
    };
    push_preds(target);
    while (!queue.empty()) {
      const GridPair c = queue.front();
      queue.pop_front();
      min_col[c.i] = std::min(min_col[c.i], c.j);
      max_col[c.i] = std::max(max_col[c.i], c.j);
      min_row[c.j] = std::min(min_row[c.j], c.i);
      max_row[c.j] = std::max(max_row[c.j], c.i);
      push_preds(c);
    }

    for (const GridPair& m : B) {
      if (avoidable.count(m)) continue;
      const bool row_form =
          min_col[m.i] != kNone && min_col[m.i] < m.j && max_col[m.i] > m.j;
      const bool col_form =
          min_row[m.j] != kNone && min_row[m.j] < m.i && max_row[m.j] > m.i;
      if (row_form || col_form) avoidable.insert(m);
    }
  }
  return {avoidable.begin(), avoidable.end()};
}

std::size_t remove_avoidable(std::size_t rows, std::size_t cols, CellSet& B) {
  std::size_t removed = 0;
  for (;;) {
    const auto av = find_avoidable(rows, cols, B);
    if (av.empty()) return removed;
    // One deletion per pass: avoidability is relative to the current set.
    B.erase(av.front());
    ++removed;
  }
}

GuardingCheck verify_guarding(const Matrix& delta, const CellSet& B,
                              double theta, double delta_value) {
  if (delta.rows() == 0 || delta.cols() == 0)
    throw std::invalid_argument("verify_guarding: empty matrix");
  if (!(theta >= 1.0))
    throw std::invalid_argument("verify_guarding: theta must be >= 1");
  const std::size_t rows = delta.rows(), cols = delta.cols();
  check_members_in_grid(rows, cols, B, "verify_guarding");

  GuardingCheck res;
  const double thr = delta_value / theta;
  for (const GridPair& m : B) {
    if (!(delta.at(m.i, m.j) >= thr)) {
      res.distance_ok = false;
      res.first_violation = m;
      break;
    }
  }

  if (B.count({1, 1}) || B.count({rows, cols})) return res;

  // A traversal avoiding B exists iff (rows, cols) is reachable from (1,1)
  // through non-members; track parents to report it.
  auto idx = [cols](std::size_t i, std::size_t j) { return (i - 1) * cols + (j - 1); };
  constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(rows * cols, kNoParent);
  std::deque<GridPair> queue;
  parent[idx(1, 1)] = idx(1, 1);
  queue.push_back({1, 1});
  const std::size_t fwd[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  while (!queue.empty() && parent[idx(rows, cols)] == kNoParent) {
    const GridPair c = queue.front();
    queue.pop_front();
    for (const auto& d : fwd) {
      const std::size_t ni = c.i + d[0], nj = c.j + d[1];
      if (ni > rows || nj > cols) continue;
      if (parent[idx(ni, nj)] != kNoParent) continue;
      if (B.count({ni, nj})) continue;
      parent[idx(ni, nj)] = idx(c.i, c.j);
      queue.push_back({ni, nj});
    }
  }
  if (parent[idx(rows, cols)] != kNoParent) {
    res.guards = false;
    std::size_t cur = idx(rows, cols);
    for (;;) {
      res.escape.push_back({cur / cols + 1, cur % cols + 1});
      if (parent[cur] == cur) break;
      cur = parent[cur];
    }
    std::reverse(res.escape.begin(), res.escape.end());
  }
  return res;
}

MergeResult merge_intervals(const Point& p, const Curve& Q,
                            const IntervalList& I, double b) {
  validate_curve(Q);
  if (p.size() != Q.dim())
    throw std::invalid_argument("merge_intervals: dimension mismatch");
  if (!(b > 0.0))
    throw std::invalid_argument("merge_intervals: window bound must be positive");
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k].lo < 1 || I[k].hi > Q.size() || I[k].lo > I[k].hi)
      throw std::invalid_argument("merge_intervals: malformed interval");
    if (k > 0 && I[k].lo <= I[k - 1].hi)
      throw std::invalid_argument(
          "merge_intervals: intervals must be disjoint and ascending");
    for (std::size_t j = I[k].lo; j <= I[k].hi; ++j)
      if (dist(p, Q.vertex(j)) < b)
        throw std::invalid_argument("merge_intervals: covered index " +
                                    std::to_string(j) +
                                    " is closer than the window bound");
  }

  MergeResult res;
  res.radius = sparse_radius(p, Q, b).radius;
  if (I.empty()) return res;
  IndexInterval cur = I.front();
  for (std::size_t k = 1; k < I.size(); ++k) {
    bool gap_clear = true;
    for (std::size_t j = cur.hi + 1; j < I[k].lo; ++j) {
      if (dist(p, Q.vertex(j)) < res.radius) {
        gap_clear = false;
        break;
      }
    }
    if (gap_clear) {
      cur.hi = I[k].hi;
    } else {
      res.merged.push_back(cur);
      cur = I[k];
    }
  }
  res.merged.push_back(cur);
  return res;
}

RowTrim trim_row(const Curve& P, const Curve& Q, const Matrix& delta,
                 CellSet& B, std::size_t row, double b) {
  if (delta.rows() != P.size() || delta.cols() != Q.size())
    throw std::invalid_argument("trim_row: matrix does not match the curves");
  if (row < 1 || row > delta.rows())
    throw std::invalid_argument("trim_row: row out of range");
  const std::size_t rows = delta.rows(), cols = delta.cols();
  check_members_in_grid(rows, cols, B, "trim_row");

  RowTrim rt;
  rt.row = row;
  std::set<std::size_t> member_cols;
  for (auto it = B.lower_bound({row, 0}); it != B.end() && it->i == row; ++it) {
    rt.intervals.push_back({it->j, it->j});
    member_cols.insert(it->j);
  }
  if (rt.intervals.empty()) return rt;

  const MergeResult mr = merge_intervals(P.vertex(row), Q, rt.intervals, b);
  rt.radius = mr.radius;
  rt.merged = mr.merged;

  const auto start = start_mask(rows, cols, B);
  auto idx = [cols](std::size_t i, std::size_t j) { return (i - 1) * cols + (j - 1); };
  for (const IndexInterval& iv : mr.merged)
    for (std::size_t j = iv.lo; j <= iv.hi; ++j)
      if (!member_cols.count(j) && start[idx(row, j)])
        rt.added.push_back({row, j});
  if (rt.added.empty()) return rt;

  // Downward cone of the adopted cells: steps (x+1,y) and (x+1,y+1), passing
  // through every cell.  Old members inside the cone are deleted.
  std::vector<char> cone(rows * cols, 0);
  std::deque<GridPair> queue(rt.added.begin(), rt.added.end());
  while (!queue.empty()) {
    const GridPair c = queue.front();
    queue.pop_front();
    if (c.i == rows) continue;
    const std::size_t nxt[2][2] = {{c.i + 1, c.j}, {c.i + 1, c.j + 1}};
    for (const auto& n : nxt) {
      if (n[1] > cols) continue;
      if (cone[idx(n[0], n[1])]) continue;
      cone[idx(n[0], n[1])] = 1;
      queue.push_back({n[0], n[1]});
    }
  }
  for (const GridPair& m : B)
    if (cone[idx(m.i, m.j)]) rt.removed.push_back(m);
  for (const GridPair& m : rt.removed) B.erase(m);
  for (const GridPair& a : rt.added) B.insert(a);
  return rt;
}

TrimReport trim_full(const Curve& P, const Curve& Q) {
  const Matrix delta = pairwise_distances(P, Q);
  TrimReport rep;
  rep.delta = min_max_traversal_value(delta);
  if (rep.delta == 0.0)
    throw std::invalid_argument(
        "trim_full: the curves are at distance zero, so no guarding window exists");

  CellSet B = build_guarding(delta, rep.delta, 1.0);
  rep.initial = B;
  rep.avoidable_removed = remove_avoidable(delta.rows(), delta.cols(), B);

  for (std::size_t i = 1; i <= delta.rows(); ++i) {
    RowTrim rt = trim_row(P, Q, delta, B, i, rep.delta);
    if (!rt.intervals.empty()) rep.row_trims.push_back(std::move(rt));
  }

  const Matrix deltaT = delta.transposed();
  CellSet BT;
  for (const GridPair& m : B) BT.insert({m.j, m.i});
  for (std::size_t j = 1; j <= delta.cols(); ++j) {
    RowTrim ct = trim_row(Q, P, deltaT, BT, j, rep.delta / 2.0);
    if (!ct.intervals.empty()) rep.col_trims.push_back(std::move(ct));
  }
  B.clear();
  for (const GridPair& m : BT) B.insert({m.j, m.i});

  rep.final_set = B;
  rep.residual_avoidable =
      find_avoidable(delta.rows(), delta.cols(), B).size();
  const GuardingCheck chk = verify_guarding(delta, B, 4.0, rep.delta);
  if (!chk.ok())
    throw std::runtime_error("trim_full: trimming produced an invalid guarding set");
  return rep;
}

namespace {

// Maximal runs of consecutive members along one line, as closed intervals.
IntervalList line_runs(const std::vector<std::size_t>& sorted_positions) {
  IntervalList runs;
  for (std::size_t k = 0; k < sorted_positions.size(); ++k) {
    if (!runs.empty() && runs.back().hi + 1 == sorted_positions[k])
      runs.back().hi = sorted_positions[k];
    else
      runs.push_back({sorted_positions[k], sorted_positions[k]});
  }
  return runs;
}

std::size_t grouped_count(const IntervalList& runs, const IntervalList& merged) {
  std::size_t groups = 0;
  std::set<std::size_t> used;  // merged intervals that absorbed some run
  for (const IndexInterval& run : runs) {
    bool covered = false;
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if (merged[k].lo <= run.lo && run.hi <= merged[k].hi) {
        used.insert(k);
        covered = true;
        break;
      }
    }
    if (!covered) ++groups;
  }
  return groups + used.size();
}

}  // namespace

GroupCounts extended_groups(std::size_t rows, std::size_t cols, const CellSet& B,
                            const std::vector<RowTrim>& row_trims,
                            const std::vector<RowTrim>& col_trims) {
  check_members_in_grid(rows, cols, B, "extended_groups");
  GroupCounts g;
  g.per_row.assign(rows, 0);
  g.per_col.assign(cols, 0);

  std::map<std::size_t, const RowTrim*> by_row, by_col;
  for (const RowTrim& rt : row_trims) by_row[rt.row] = &rt;
  for (const RowTrim& ct : col_trims) by_col[ct.row] = &ct;

  std::vector<std::vector<std::size_t>> row_cells(rows + 1), col_cells(cols + 1);
  for (const GridPair& m : B) {
    row_cells[m.i].push_back(m.j);
    col_cells[m.j].push_back(m.i);
  }
  for (std::size_t i = 1; i <= rows; ++i) {
    std::sort(row_cells[i].begin(), row_cells[i].end());
    const auto runs = line_runs(row_cells[i]);
    const auto it = by_row.find(i);
    g.per_row[i - 1] =
        grouped_count(runs, it == by_row.end() ? IntervalList{} : it->second->merged);
    g.rows_max = std::max(g.rows_max, g.per_row[i - 1]);
  }
  for (std::size_t j = 1; j <= cols; ++j) {
    std::sort(col_cells[j].begin(), col_cells[j].end());
    const auto runs = line_runs(col_cells[j]);
    const auto it = by_col.find(j);
    g.per_col[j - 1] =
        grouped_count(runs, it == by_col.end() ? IntervalList{} : it->second->merged);
    g.cols_max = std::max(g.cols_max, g.per_col[j - 1]);
  }
  return g;
}

bool has_start_predecessors(std::size_t rows, std::size_t cols, const CellSet& B) {
  check_members_in_grid(rows, cols, B, "has_start_predecessors");
  if (B.empty()) return true;
  if (B.size() == 1 && *B.begin() == GridPair{1, 1}) return true;
  const auto start = start_mask(rows, cols, B);
  auto idx = [cols](std::size_t i, std::size_t j) { return (i - 1) * cols + (j - 1); };
  for (const GridPair& m : B) {
    const std::size_t px[3] = {m.i - 1, m.i, m.i - 1};
    const std::size_t py[3] = {m.j, m.j - 1, m.j - 1};
    bool has = false;
    for (int k = 0; k < 3 && !has; ++k) {
      if (px[k] < 1 || py[k] < 1) continue;
      if (start[idx(px[k], py[k])]) has = true;
    }
    if (!has) return false;
  }
  return true;
}

}  // namespace frechproj
