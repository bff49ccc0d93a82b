#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "frechproj/geometry.hpp"
#include "frechproj/metrics.hpp"

namespace frechproj {

// A guarding set is a set of grid cells (1-based) that every monotone
// traversal of the two curves must pass through, where each member pairs
// vertices at distance >= delta / theta.
using CellSet = std::set<GridPair>;

// Builds a guarding set on the traversal grid of a distance matrix whose
// min-max traversal value is exactly delta_value (checked; bitwise).
// If delta(1,1) >= delta_value / theta the set is {(1,1)}; otherwise a BFS
// from (1,1) over cells with delta < delta_value / theta collects every
// blocked forward neighbor (i+1,j), (i,j+1), (i+1,j+1) of the reached region.
CellSet build_guarding(const Matrix& delta, double delta_value, double theta);

// Cells split by B: `start` is everything reachable from (1,1) without
// entering B (empty when (1,1) is a member), `halt` is the rest.
struct Partition {
  CellSet start;
  CellSet guard;
  CellSet halt;
};
Partition partition_cells(std::size_t rows, std::size_t cols, const CellSet& B);

// A member (i,j) is avoidable when, for some member (i',j'), the start-region
// cells that can reach (i',j') through start-region cells span strictly
// around it in its row (columns both below and above j) or strictly around it
// in its column (rows both below and above i).  Avoidable members can be
// deleted without opening an unguarded traversal.
std::vector<GridPair> find_avoidable(std::size_t rows, std::size_t cols,
                                     const CellSet& B);

// Deletes avoidable members, re-scanning until none remain; returns the
// number removed.
std::size_t remove_avoidable(std::size_t rows, std::size_t cols, CellSet& B);

struct GuardingCheck {
  bool distance_ok = true;  // every member pairs vertices at distance >= delta/theta
  bool guards = true;       // every monotone traversal meets the set
  GridPair first_violation{};        // a member violating the distance property
  std::vector<GridPair> escape;      // a traversal avoiding B, when guards == false
  bool ok() const { return distance_ok && guards; }
};

// Checks both guarding-set properties against a distance matrix.  The
// distance comparison is exact (no tolerance).
GuardingCheck verify_guarding(const Matrix& delta, const CellSet& B,
                              double theta, double delta_value);

// Closed 1-based index interval.
struct IndexInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  friend auto operator<=>(const IndexInterval&, const IndexInterval&) = default;
};
using IntervalList = std::vector<IndexInterval>;

struct MergeResult {
  double radius = 0.0;   // sphere radius used for the gap test
  IntervalList merged;   // merged intervals; endpoints inherited from the input
};

// Merges consecutive index intervals of Q around viewpoint p.  Two adjacent
// intervals merge when every vertex strictly between them lies at distance
// >= r from p, where r is the sparse radius for window bound b.  Every index
// covered by the input must satisfy dist(p, q_j) >= b (std::invalid_argument
// naming the first offending index otherwise); the input must be disjoint,
// ascending, and within range.
MergeResult merge_intervals(const Point& p, const Curve& Q,
                            const IntervalList& I, double b);

// One row-trimming step.  The row's members become intervals I (singletons),
// merged into J; gap columns j in (union J) minus (union I) whose cells lie in
// the start region are adopted into B, and every old member inside the
// downward cone of the adopted cells (steps (x+1,y) and (x+1,y+1), passing
// through any cell) is deleted.  Adopted cells pair vertices at distance
// >= b/2 by the gap condition.
struct RowTrim {
  std::size_t row = 0;
  double radius = 0.0;
  IntervalList intervals;        // I: singleton intervals of the row's members
  IntervalList merged;           // J
  std::vector<GridPair> added;   // adopted cells
  std::vector<GridPair> removed; // members deleted by the cone sweep
};
RowTrim trim_row(const Curve& P, const Curve& Q, const Matrix& delta,
                 CellSet& B, std::size_t row, double b);

// Full trimming pipeline: build the guarding set at theta = 1, delete
// avoidable members, trim every row with window bound delta (giving a
// 2-guarding), then trim every column via the transposed grid with window
// bound delta/2 (giving a 4-guarding).  The final set is re-verified; any
// avoidable members remaining afterwards are counted, not deleted.
struct TrimReport {
  double delta = 0.0;
  CellSet initial;                  // output of the initial build
  std::size_t avoidable_removed = 0;
  std::vector<RowTrim> row_trims;   // one per row that had members
  std::vector<RowTrim> col_trims;   // per column, in transposed coordinates
  CellSet final_set;
  std::size_t residual_avoidable = 0;
};
TrimReport trim_full(const Curve& P, const Curve& Q);

// Extended group count per line: maximal runs of members are grouped together
// when one recorded merged interval covers them; runs no interval covers count
// singly.  Returns per-row and per-column counts plus their maxima; rows or
// columns that were never trimmed group by bare run count.
struct GroupCounts {
  std::vector<std::size_t> per_row;  // index 0 <-> row 1
  std::vector<std::size_t> per_col;
  std::size_t rows_max = 0;
  std::size_t cols_max = 0;
};
GroupCounts extended_groups(std::size_t rows, std::size_t cols, const CellSet& B,
                            const std::vector<RowTrim>& row_trims,
                            const std::vector<RowTrim>& col_trims);

// Start-region predecessor invariant: every member other than a lone (1,1)
// has a start-region cell among (i-1,j), (i,j-1), (i-1,j-1).
bool has_start_predecessors(std::size_t rows, std::size_t cols, const CellSet& B);

}  // namespace frechproj
