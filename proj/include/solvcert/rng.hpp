#pragma once

#include <cstdint>

#include "solvcert/rational.hpp"

namespace solvcert {

/// Deterministic generator with platform-independent output (splitmix64);
/// the standard-library distributions are implementation-defined, which
/// would break reproducibility of seeded runs across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] (inclusive).
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform over {-box..box}/den, the sampling box used everywhere.
  Rat rational(long box = 10, long den = 7) {
    return Rat(uniform(-box, box), den);
  }

  double real(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

 private:
  std::uint64_t state_;
};

}  // namespace solvcert
