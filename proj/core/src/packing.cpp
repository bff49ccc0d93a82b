#include "frechproj/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace frechproj {

namespace {

void check_center(const Curve& c, const Point& p, const char* who) {
  validate_curve(c);
  if (p.size() != c.dim())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

// Perpendicular-foot parameter of p on segment a->b, or -1 when the foot is
// not strictly interior (or the edge is degenerate).
double interior_foot(const Point& p, const Point& a, const Point& b) {
  Point v(a.size()), w(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    v[k] = b[k] - a[k];
    w[k] = p[k] - a[k];
  }
  const double vv = dot(v, v);
  if (vv == 0.0) return -1.0;
  const double s = dot(w, v) / vv;
  return (s > 0.0 && s < 1.0) ? s : -1.0;
}

}  // namespace

double ball_curve_length(const Curve& c, const Point& center, double r) {
  check_center(c, center, "ball_curve_length");
  if (r < 0.0)
    throw std::invalid_argument("ball_curve_length: radius must be >= 0");
  const std::size_t d = c.dim();
  double total = 0.0;
  for (std::size_t e = 1; e + 1 <= c.size(); ++e) {
    const Point& a = c.vertex(e);
    const Point& b = c.vertex(e + 1);
    double A = 0.0, B = 0.0, C = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double vk = b[k] - a[k];
      const double wk = a[k] - center[k];
      A += vk * vk;
      B += 2.0 * wk * vk;
      C += wk * wk;
    }
    C -= r * r;
    if (A == 0.0) continue;  // degenerate edge: no length either way
    const double disc = B * B - 4.0 * A * C;
    if (disc <= 0.0) continue;  // misses the ball, or tangent (measure zero)
    const double sq = std::sqrt(disc);
    const double lo = std::max((-B - sq) / (2.0 * A), 0.0);
    const double hi = std::min((-B + sq) / (2.0 * A), 1.0);
    if (hi > lo) total += (hi - lo) * std::sqrt(A);
  }
  return total;
}

PackednessResult packedness_estimate(const Curve& c, unsigned resolution) {
  validate_curve(c);
  // Nested per-edge fraction family: raising the resolution only adds
  // candidate centers, so the estimate is monotone in resolution.
  std::set<double> fracs;
  for (unsigned m = 1; m <= resolution; ++m)
    for (unsigned j = 1; j <= m; ++j)
      fracs.insert(static_cast<double>(j) / (m + 1.0));

  std::vector<Point> centers;
  for (const Point& v : c.vertices) centers.push_back(v);
  for (std::size_t e = 1; e + 1 <= c.size(); ++e) {
    const Point& a = c.vertex(e);
    const Point& b = c.vertex(e + 1);
    if (dist(a, b) == 0.0) continue;
    for (double f : fracs) centers.push_back(lerp(a, b, f));
  }

  PackednessResult best;
  std::vector<double> radii;
  for (const Point& ctr : centers) {
    radii.clear();
    for (const Point& v : c.vertices) radii.push_back(dist(ctr, v));
    for (std::size_t e = 1; e + 1 <= c.size(); ++e) {
      const Point& a = c.vertex(e);
      const Point& b = c.vertex(e + 1);
      const double s = interior_foot(ctr, a, b);
      if (s >= 0.0) radii.push_back(dist(ctr, lerp(a, b, s)));
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (double r : radii) {
      if (r <= 1e-12) continue;
      const double val = ball_curve_length(c, ctr, r) / r;
      if (val > best.value) {
        best.value = val;
        best.center = ctr;
        best.radius = r;
      }
    }
  }
  return best;
}

std::size_t sphere_crossing_count(const Point& p, const Curve& Q, double r) {
  check_center(Q, p, "sphere_crossing_count");
  if (r < 0.0)
    throw std::invalid_argument("sphere_crossing_count: radius must be >= 0");
  std::size_t count = 0;
  for (std::size_t e = 1; e + 1 <= Q.size(); ++e) {
    const Point& a = Q.vertex(e);
    const Point& b = Q.vertex(e + 1);
    const double mind = dist_point_segment(p, a, b);
    const double maxd = std::max(dist(p, a), dist(p, b));
    if (mind <= r + 1e-12 && maxd >= r - 1e-12) ++count;
  }
  return count;
}

SparseRadius sparse_radius(const Point& p, const Curve& Q, double b) {
  check_center(Q, p, "sparse_radius");
  if (!(b > 0.0))
    throw std::invalid_argument("sparse_radius: window bound must be positive");
  const double lo = b / 2.0, hi = b;

  // Crossing counts can only change where the sphere passes through a vertex
  // or an interior perpendicular foot; collect those radii inside [b/2, b].
  std::vector<double> events;
  for (const Point& q : Q.vertices) {
    const double d = dist(p, q);
    if (d >= lo && d <= hi) events.push_back(d);
  }
  for (std::size_t e = 1; e + 1 <= Q.size(); ++e) {
    const Point& a = Q.vertex(e);
    const Point& bb = Q.vertex(e + 1);
    const double s = interior_foot(p, a, bb);
    if (s < 0.0) continue;
    const double d = dist(p, lerp(a, bb, s));
    if (d >= lo && d <= hi) events.push_back(d);
  }
  std::sort(events.begin(), events.end());

  std::vector<double> bounds;
  bounds.push_back(lo);
  bounds.insert(bounds.end(), events.begin(), events.end());
  bounds.push_back(hi);

  SparseRadius best;
  best.count = std::numeric_limits<std::size_t>::max();
  double best_gap = -1.0;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const double gap = bounds[k + 1] - bounds[k];
    if (gap <= 0.0) continue;
    const double r = bounds[k] + gap / 2.0;
    const std::size_t cnt = sphere_crossing_count(p, Q, r);
    if (cnt < best.count || (cnt == best.count && gap > best_gap) ||
        (cnt == best.count && gap == best_gap && r < best.radius)) {
      best.count = cnt;
      best.radius = r;
      best_gap = gap;
    }
  }
  return best;
}

}  // namespace frechproj
