#pragma once

#include <cstdint>

#include "nlsa/field.hpp"

namespace nlsa {

/// 64-bit linear congruential generator with Knuth's MMIX constants
/// (multiplier 6364136223846793005, increment 1442695040888963407).
/// Doubles come from the top 53 bits so every language reproduces the
/// same stream bit for bit.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_double() - 1.0; }

 private:
  std::uint64_t state_;
};

/// Deterministic smooth random field: spectral coefficients drawn slot by
/// slot in FFT storage order (real part first, then imaginary), shaped by
/// the envelope exp(-(m / (n/16))^2) over the signed mode index m, then
/// rescaled to the requested L^2 norm. Smoothness keeps the spectral tail
/// far below the resolution monitor's threshold.
ComplexField random_field(const GridPtr& grid, std::uint64_t seed,
                          double target_norm);

}  // namespace nlsa
