#pragma once

#include <cstddef>

#include "frechproj/geometry.hpp"
#include "frechproj/metrics.hpp"
#include "frechproj/rng.hpp"

namespace frechproj {

struct CurvePair {
  Curve P;
  Curve Q;
};

// Flat-wedge pair: P subdivides the base segment (0,0) -> (2 cos a, 0) into
// 2t edges; Q rises to the apex (cos a, sin a) and descends back, t edges per
// arm.  Both curves have 2t+1 vertices.  Their discrete Frechet distance is
// sin(a) and their dynamic time warping distance is t sin(a).  Requires
// 0 < a < pi/2.
CurvePair gen_wedge(std::size_t t, double alpha);

// Star with k unit spokes at angles 2(i-1)pi/k, visiting tips alternating
// with the center and finishing back at the first tip (2k+1 vertices).  With
// hat_radius > 0 every tip visit detours through a hat on the same ray at
// that radius: hat, tip, hat, center (4k+1 vertices).
Curve gen_star(std::size_t k, double hat_radius = 0.0);

// Star pair (k even): P has k spokes, Q has k+1.  When hatted both curves
// share the hat radius 1 / (2 cos(pi/(k+1))).  P is padded by repeating its
// final vertex until the curves have equally many vertices; repetition leaves
// the discrete Frechet distance unchanged.
struct StarPair {
  Curve P;
  Curve Q;
  double hat_radius = 0.0;  // 0 when not hatted
};
StarPair gen_star_pair(std::size_t k, bool hatted);

// Distance matrix that forces a large guarding set: every third column (and
// column t) is a wall carrying delta_value in rows 2..t, row 1 and all other
// columns are free (zero).  The min-max traversal value is exactly
// delta_value; for t divisible by 3 the guarding set built from it has
// exactly (t-1) * t / 3 members.
Matrix gen_fork_matrix(std::size_t t, double delta_value);

// Random walk: t vertices in R^d starting at the origin, each step of length
// `step` in a fresh uniform random direction.  step may be zero.
Curve gen_random_walk(std::size_t d, std::size_t t, double step, Rng& rng);

}  // namespace frechproj
