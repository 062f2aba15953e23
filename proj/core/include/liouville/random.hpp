#pragma once

#include "liouville/rational.hpp"

#include <cstdint>
#include <random>

namespace liouville {

/// SplitMix64 finalizer. Used to derive independent per-check and per-trial
/// seeds from one configured seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream = 0) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic sampler of small rationals and reals. Only raw engine output
/// is used (no std distributions) so streams are identical across standard
/// library implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t index(std::uint64_t n) { return engine_() % n; }

  /// Numerator uniform in [−9, 9], denominator uniform in {1, 2, 3}.
  Rational small_rational() {
    const long num = static_cast<long>(index(19)) - 9;
    const long den = static_cast<long>(index(3)) + 1;
    return Rational(num, den);
  }
  Rational small_nonzero_rational() {
    Rational r;
    do r = small_rational();
    while (r.is_zero());
    return r;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace liouville
