#include "frechproj/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace frechproj {

namespace {
constexpr double kPi = std::numbers::pi;
}

CurvePair gen_wedge(std::size_t t, double alpha) {
  if (t < 1) throw std::invalid_argument("gen_wedge: t must be >= 1");
  if (!(alpha > 0.0 && alpha < kPi / 2.0))
    throw std::invalid_argument("gen_wedge: apex angle must lie in (0, pi/2)");
  const Point base0{0.0, 0.0};
  const Point apex{std::cos(alpha), std::sin(alpha)};
  const Point base1{2.0 * std::cos(alpha), 0.0};

  CurvePair pair;
  pair.P.vertices.reserve(2 * t + 1);
  for (std::size_t i = 0; i <= 2 * t; ++i)
    pair.P.vertices.push_back(
        lerp(base0, base1, static_cast<double>(i) / (2.0 * static_cast<double>(t))));
  pair.Q.vertices.reserve(2 * t + 1);
  for (std::size_t j = 0; j <= t; ++j)
    pair.Q.vertices.push_back(
        lerp(base0, apex, static_cast<double>(j) / static_cast<double>(t)));
  for (std::size_t j = 1; j <= t; ++j)
    pair.Q.vertices.push_back(
        lerp(apex, base1, static_cast<double>(j) / static_cast<double>(t)));
  return pair;
}

Curve gen_star(std::size_t k, double hat_radius) {
  if (k < 2) throw std::invalid_argument("gen_star: need at least 2 spokes");
  if (hat_radius < 0.0)
    throw std::invalid_argument("gen_star: hat radius must be >= 0");
  std::vector<Point> tips(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double ang = 2.0 * static_cast<double>(i) * kPi / static_cast<double>(k);
    tips[i] = {std::cos(ang), std::sin(ang)};
  }
  const Point center{0.0, 0.0};

  Curve c;
  if (hat_radius == 0.0) {
    c.vertices.reserve(2 * k + 1);
    c.vertices.push_back(tips[0]);
    for (std::size_t i = 1; i <= k; ++i) {
      c.vertices.push_back(center);
      c.vertices.push_back(tips[i % k]);
    }
  } else {
    c.vertices.reserve(4 * k + 1);
    for (std::size_t i = 0; i < k; ++i) {
      const Point hat{hat_radius * tips[i][0], hat_radius * tips[i][1]};
      c.vertices.push_back(hat);
      c.vertices.push_back(tips[i]);
      c.vertices.push_back(hat);
      c.vertices.push_back(center);
    }
    c.vertices.push_back(tips[0]);
  }
  return c;
}

StarPair gen_star_pair(std::size_t k, bool hatted) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("gen_star_pair: k must be even and >= 2");
  StarPair sp;
  sp.hat_radius =
      hatted ? 1.0 / (2.0 * std::cos(kPi / static_cast<double>(k + 1))) : 0.0;
  sp.P = gen_star(k, sp.hat_radius);
  sp.Q = gen_star(k + 1, sp.hat_radius);
  while (sp.P.size() < sp.Q.size())
    sp.P.vertices.push_back(sp.P.vertices.back());
  return sp;
}

Matrix gen_fork_matrix(std::size_t t, double delta_value) {
  if (t < 2) throw std::invalid_argument("gen_fork_matrix: t must be >= 2");
  if (!(delta_value > 0.0))
    throw std::invalid_argument("gen_fork_matrix: delta_value must be positive");
  Matrix m(t, t, 0.0);
  for (std::size_t j = 1; j <= t; ++j) {
    if (j % 3 != 0 && j != t) continue;
    for (std::size_t i = 2; i <= t; ++i) m.at(i, j) = delta_value;
  }
  return m;
}

Curve gen_random_walk(std::size_t d, std::size_t t, double step, Rng& rng) {
  if (d < 1) throw std::invalid_argument("gen_random_walk: d must be >= 1");
  if (t < 1) throw std::invalid_argument("gen_random_walk: t must be >= 1");
  if (step < 0.0)
    throw std::invalid_argument("gen_random_walk: step must be >= 0");
  Curve c;
  c.vertices.reserve(t);
  Point cur(d, 0.0);
  c.vertices.push_back(cur);
  for (std::size_t i = 1; i < t; ++i) {
    const Point u = sample_unit_vector(d, rng);
    for (std::size_t kdim = 0; kdim < d; ++kdim) cur[kdim] += step * u[kdim];
    c.vertices.push_back(cur);
  }
  return c;
}

}  // namespace frechproj
