#pragma once

#include <cstddef>

#include "frechproj/geometry.hpp"

namespace frechproj {

// Arc length of the part of c inside the closed ball B(center, r), computed
// per edge by clipping against the quadratic |a + s(b-a) - center|^2 <= r^2.
double ball_curve_length(const Curve& c, const Point& center, double r);

struct PackednessResult {
  double value = 0.0;   // certified lower bound on the packedness constant
  Point center;         // witness ball center (a point on the curve)
  double radius = 0.0;  // witness ball radius
};

// Lower bound on the smallest c such that every ball B(p, r) satisfies
// length(c ∩ B(p, r)) <= c * r.  Candidate centers are the vertices plus, on
// each edge, the nested fraction family { j/(m+1) : 1 <= m <= resolution };
// candidate radii are each center's distances to vertices and to interior
// perpendicular feet.  The family is nested, so raising resolution never
// lowers the returned value.  Every reported value is certified by an explicit
// witness ball.
PackednessResult packedness_estimate(const Curve& c, unsigned resolution);

// Number of edges of Q meeting the sphere S(p, r): an edge counts when its
// minimum distance to p is <= r and its maximum distance is >= r (both with a
// 1e-12 slack).  The maximum sits at an endpoint; the minimum at the clamped
// perpendicular foot.
std::size_t sphere_crossing_count(const Point& p, const Curve& Q, double r);

struct SparseRadius {
  double radius = 0.0;
  std::size_t count = 0;  // edges of Q meeting the sphere S(p, radius)
};

// Picks r in [b/2, b] minimizing the number of edges of Q that meet the
// sphere S(p, r).  Distances from p to vertices and to interior perpendicular
// feet are the only radii where the count can change; candidates are the
// midpoints of the gaps between consecutive such events (with b/2 and b as
// outer boundaries).  Ties prefer the widest gap, then the smaller radius.
SparseRadius sparse_radius(const Point& p, const Curve& Q, double b);

}  // namespace frechproj
