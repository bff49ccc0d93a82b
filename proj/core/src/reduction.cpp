#include "frechproj/reduction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace frechproj {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(std::size_t d) {
  if (d < 2 || d > 5)
    throw std::invalid_argument("supported dimensions are 2 through 5");
}

}  // namespace

double angle_pdf(std::size_t d, double alpha) {
  check_dim(d);
  if (!(alpha >= 0.0 && alpha <= kPi))
    throw std::invalid_argument("angle must lie in [0, pi]");
  const double s = std::sin(alpha);
  switch (d) {
    case 2: return 1.0 / kPi;
    case 3: return s / 2.0;
    case 4: return 2.0 * s * s / kPi;
    default: return 3.0 * s * s * s / 4.0;  // d == 5
  }
}

double reduction_cdf(std::size_t d, double phi) {
  check_dim(d);
  if (!(phi >= 0.0 && phi <= 1.0))
    throw std::invalid_argument("shrink factor must lie in [0, 1]");
  switch (d) {
    case 2: return 1.0 - 2.0 * std::acos(phi) / kPi;
    case 3: return phi;
    case 4:
      return 1.0 -
             (2.0 / kPi) * (std::acos(phi) - phi * std::sqrt(1.0 - phi * phi));
    default:  // d == 5
      return (9.0 / 8.0) * phi - std::cos(3.0 * std::acos(phi)) / 8.0;
  }
}

double reduction_bound(std::size_t d, double phi) {
  check_dim(d);
  if (!(phi >= 0.0 && phi <= 1.0))
    throw std::invalid_argument("shrink factor must lie in [0, 1]");
  return (d <= 3) ? phi : (1.0 + 2.0 / kPi) * phi;
}

}  // namespace frechproj
