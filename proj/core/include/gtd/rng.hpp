#ifndef GTD_RNG_HPP
#define GTD_RNG_HPP

#include <cstdint>

namespace gtd {

// Deterministic, platform-independent pseudo-random doubles in [0, 1).
// Standard-library distributions are not bit-stable across implementations,
// and seeded runs must reproduce byte-identical output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Low-discrepancy 2-D sequence (generalized golden ratio); the seed rotates
// the starting phase so distinct seeds sample distinct but reproducible sets.
class Quasi2D {
 public:
  explicit Quasi2D(std::uint64_t seed) {
    SplitMix64 rng(seed);
    x_ = rng.next_double();
    y_ = rng.next_double();
  }

  void next(double& u, double& v) {
    // Plastic-constant increments (R2 sequence).
    constexpr double a1 = 0.7548776662466927;
    constexpr double a2 = 0.5698402909980532;
    x_ += a1;
    if (x_ >= 1.0) x_ -= 1.0;
    y_ += a2;
    if (y_ >= 1.0) y_ -= 1.0;
    u = x_;
    v = y_;
  }

 private:
  double x_, y_;
};

}  // namespace gtd

#endif
