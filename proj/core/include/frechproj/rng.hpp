#pragma once

#include <cstdint>
#include <random>

namespace frechproj {

// Deterministic random streams.  Every randomized routine in this library
// receives an Rng derived from a user-supplied master seed plus fixed integer
// keys, so results are reproducible bit-for-bit across platforms and across
// worker counts.  mt19937_64 is fully specified by the standard; the uniform
// and gaussian transforms below are hand-rolled for the same reason (libstdc++
// and libc++ disagree on std::normal_distribution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Stream derivation: hash (master, k1, k2, k3) into an engine seed.
  // Distinct key tuples give statistically independent streams.
  static Rng derive(std::uint64_t master, std::uint64_t k1, std::uint64_t k2,
                    std::uint64_t k3);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Marsaglia's polar method; pairs are generated at once
  // and the spare is cached, so draw parity affects the stream position.
  double gaussian();

  // Uniform integer in [0, n), rejection sampled (no modulo bias).  n > 0.
  std::uint64_t uniform_below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  double cached_gauss_ = 0.0;
  bool has_cached_ = false;
};

// One round of the splitmix64 finalizer; used for seed derivation and as a
// cheap avalanche mix wherever integer keys must be decorrelated.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace frechproj
