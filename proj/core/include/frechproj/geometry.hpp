#pragma once

#include <cstddef>
#include <vector>

#include "frechproj/rng.hpp"

namespace frechproj {

// A point is a dense coordinate vector; all points of a curve share one
// dimension d >= 1.  Curves are polygonal: vertices joined by segments.
using Point = std::vector<double>;

struct Curve {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().size(); }

  // 1-based access, matching the (i, j) convention used for traversal grids.
  const Point& vertex(std::size_t i) const { return vertices[i - 1]; }
  Point& vertex(std::size_t i) { return vertices[i - 1]; }
};

// Throws std::invalid_argument unless the curve is non-empty, dimensionally
// consistent, and every coordinate is finite.
void validate_curve(const Curve& c);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double dist(const Point& a, const Point& b);

// Point on segment a->b at parameter s in [0, 1].
Point lerp(const Point& a, const Point& b, double s);

// Distance from p to the closed segment [a, b] (foot clamped to the segment).
double dist_point_segment(const Point& p, const Point& a, const Point& b);

// v / |v|; throws std::invalid_argument when |v| is numerically zero.
Point normalize(const Point& v);

// Uniform direction on the unit sphere S^{d-1}.  d = 2 uses a uniform angle;
// higher dimensions normalize a vector of iid gaussians (resampling in the
// astronomically unlikely case of a near-zero norm).
Point sample_unit_vector(std::size_t d, Rng& rng);

// Scalar projection <p, u> of p onto the line spanned by unit vector u.
double project_point(const Point& p, const Point& u);

// Projects every vertex; the result is a 1-dimensional curve.
Curve project_curve(const Curve& c, const Point& u);

// Pads vertices with trailing zeros up to dimension d (d >= dim(c)).
Curve embed(const Curve& c, std::size_t d);

// First len vertices (len >= 1, len <= size).
Curve prefix(const Curve& c, std::size_t len);

// len consecutive vertices starting at 1-based index start.
Curve subcurve(const Curve& c, std::size_t start, std::size_t len);

// Total arc length of the polygonal curve.
double curve_length(const Curve& c);

}  // namespace frechproj
