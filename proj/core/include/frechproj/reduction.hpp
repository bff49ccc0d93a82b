#pragma once

#include <cstddef>

namespace frechproj {

// Distributional facts about projecting onto a uniformly random line in R^d.
// Supported dimensions: 2 <= d <= 5 (closed forms are hardcoded per d).

// Density, at angle alpha in [0, pi], of the angle between a fixed nonzero
// vector and a uniform random direction.
double angle_pdf(std::size_t d, double alpha);

// Probability that a fixed segment's length shrinks by factor <= phi under
// projection onto a uniform random line: Pr[|cos(angle)| <= phi], phi in [0,1].
double reduction_cdf(std::size_t d, double phi);

// Closed-form linear upper bound on reduction_cdf: phi for d in {2, 3} and
// (1 + 2/pi) * phi for d in {4, 5}.
double reduction_bound(std::size_t d, double phi);

}  // namespace frechproj
