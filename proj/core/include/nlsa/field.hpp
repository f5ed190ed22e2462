#pragma once

#include <complex>
#include <vector>

#include "nlsa/grid.hpp"

namespace nlsa {

using Complex = std::complex<double>;

/// One complex state on a Grid. `values` hold either point values or
/// spectral coefficients (per FFT storage slot) depending on context.
struct ComplexField {
  GridPtr grid;
  std::vector<Complex> values;

  ComplexField() = default;
  explicit ComplexField(GridPtr g)
      : grid(std::move(g)), values(grid->n_points()) {}
  ComplexField(GridPtr g, std::vector<Complex> v);

  std::size_t size() const { return values.size(); }
};

ComplexField zero_field(GridPtr grid);

bool same_grid(const ComplexField& a, const ComplexField& b);
/// Throws std::invalid_argument("incompatible grids") if grids differ.
void require_same_grid(const ComplexField& a, const ComplexField& b);

bool all_finite(const ComplexField& u);

ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(Complex c, const ComplexField& u);
inline ComplexField operator*(double c, const ComplexField& u) {
  return Complex(c, 0.0) * u;
}

/// g(x) * exp(i k_mode x): the weakly-null modulation family.
ComplexField modulate(const ComplexField& g, int mode);

/// Time-ordered frames with uniform sampling step dt_sample, first frame
/// at t0.
struct SpaceTimeField {
  GridPtr grid;
  double dt_sample = 0.0;
  double t0 = 0.0;
  std::vector<ComplexField> frames;

  std::size_t n_frames() const { return frames.size(); }
  double t_of(std::size_t i) const {
    return t0 + dt_sample * static_cast<double>(i);
  }
  /// Time spanned by the recorded frames.
  double duration() const {
    return frames.size() < 2
               ? 0.0
               : dt_sample * static_cast<double>(frames.size() - 1);
  }
};

}  // namespace nlsa
