#include "frechproj/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace frechproj {

void validate_curve(const Curve& c) {
  if (c.vertices.empty())
    throw std::invalid_argument("curve must have at least one vertex");
  const std::size_t d = c.vertices.front().size();
  if (d == 0) throw std::invalid_argument("curve dimension must be positive");
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (c.vertices[i].size() != d)
      throw std::invalid_argument("curve vertex " + std::to_string(i + 1) +
                                  " has inconsistent dimension");
    for (double x : c.vertices[i])
      if (!std::isfinite(x))
        throw std::invalid_argument("curve vertex " + std::to_string(i + 1) +
                                    " has a non-finite coordinate");
  }
}

double dot(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double dist(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dist: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double dk = a[k] - b[k];
    s += dk * dk;
  }
  return std::sqrt(s);
}

Point lerp(const Point& a, const Point& b, double s) {
  Point r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + s * (b[k] - a[k]);
  return r;
}

double dist_point_segment(const Point& p, const Point& a, const Point& b) {
  Point v(a.size()), w(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    v[k] = b[k] - a[k];
    w[k] = p[k] - a[k];
  }
  const double vv = dot(v, v);
  if (vv == 0.0) return dist(p, a);
  double s = dot(w, v) / vv;
  if (s < 0.0) s = 0.0;
  if (s > 1.0) s = 1.0;
  return dist(p, lerp(a, b, s));
}

Point normalize(const Point& v) {
  const double n = norm(v);
  if (n < 1e-12)
    throw std::invalid_argument("normalize: vector has (near-)zero norm");
  Point r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k] / n;
  return r;
}

Point sample_unit_vector(std::size_t d, Rng& rng) {
  if (d == 0) throw std::invalid_argument("sample_unit_vector: d must be >= 1");
  if (d == 2) {
    const double theta = rng.uniform01() * 2.0 * std::numbers::pi;
    return {std::cos(theta), std::sin(theta)};
  }
  for (;;) {
    Point v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = rng.gaussian();
    const double n = norm(v);
    if (n < 1e-12) continue;
    for (std::size_t k = 0; k < d; ++k) v[k] /= n;
    return v;
  }
}

double project_point(const Point& p, const Point& u) { return dot(p, u); }

Curve project_curve(const Curve& c, const Point& u) {
  Curve r;
  r.vertices.reserve(c.size());
  for (const Point& p : c.vertices) r.vertices.push_back({project_point(p, u)});
  return r;
}

Curve embed(const Curve& c, std::size_t d) {
  if (d < c.dim())
    throw std::invalid_argument("embed: target dimension below curve dimension");
  Curve r;
  r.vertices.reserve(c.size());
  for (const Point& p : c.vertices) {
    Point q = p;
    q.resize(d, 0.0);
    r.vertices.push_back(std::move(q));
  }
  return r;
}

Curve prefix(const Curve& c, std::size_t len) {
  if (len < 1 || len > c.size())
    throw std::invalid_argument("prefix: length out of range");
  Curve r;
  r.vertices.assign(c.vertices.begin(),
                    c.vertices.begin() + static_cast<std::ptrdiff_t>(len));
  return r;
}

Curve subcurve(const Curve& c, std::size_t start, std::size_t len) {
  if (start < 1 || len < 1 || start + len - 1 > c.size())
    throw std::invalid_argument("subcurve: range out of bounds");
  Curve r;
  r.vertices.assign(
      c.vertices.begin() + static_cast<std::ptrdiff_t>(start - 1),
      c.vertices.begin() + static_cast<std::ptrdiff_t>(start - 1 + len));
  return r;
}

double curve_length(const Curve& c) {
  double s = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i)
    s += dist(c.vertices[i - 1], c.vertices[i]);
  return s;
}

}  // namespace frechproj
