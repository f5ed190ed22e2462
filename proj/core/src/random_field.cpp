#include "nlsa/random_field.hpp"

#include <cmath>

#include "nlsa/spectral.hpp"

namespace nlsa {

ComplexField random_field(const GridPtr& grid, std::uint64_t seed,
                          double target_norm) {
  Lcg64 rng(seed);
  const std::size_t n = grid->n_points();
  const double mode_scale = static_cast<double>(n) / 16.0;

  ComplexField coeffs(grid);
  double spectral_mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double re = rng.next_symmetric();
    const double im = rng.next_symmetric();
    const double m = static_cast<double>(grid->mode_of(j)) / mode_scale;
    const double envelope = std::exp(-m * m);
    coeffs.values[j] = Complex(re * envelope, im * envelope);
    spectral_mass += std::norm(coeffs.values[j]);
  }

  // Parseval: ||u||^2 = L * sum |c|^2.
  const double current = std::sqrt(grid->length() * spectral_mass);
  if (current == 0.0 || target_norm == 0.0) return zero_field(grid);
  const double scale = target_norm / current;
  for (Complex& c : coeffs.values) c *= scale;
  return inverse_dft(coeffs);
}

}  // namespace nlsa
