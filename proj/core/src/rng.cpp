#include "frechproj/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace frechproj {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t master, std::uint64_t k1, std::uint64_t k2,
                std::uint64_t k3) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ k1);
  h = splitmix64(h ^ k2);
  h = splitmix64(h ^ k3);
  return Rng(h);
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gauss_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  cached_gauss_ = v * f;
  has_cached_ = true;
  return u * f;
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

}  // namespace frechproj
