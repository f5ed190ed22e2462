#pragma once

#include <cmath>

#include "nlsa/field.hpp"
#include "nlsa/spectral.hpp"

namespace nlsa::test {

inline double rel_l2_error(const ComplexField& got, const ComplexField& want) {
  const double denom = l2_norm(want);
  const double diff = l2_norm(got - want);
  return denom > 0.0 ? diff / denom : diff;
}

inline ComplexField plane_wave(const GridPtr& grid, int mode, Complex amp) {
  ComplexField u(grid);
  const double k = grid->wavenumbers()[grid->index_of(mode)];
  const auto& x = grid->points();
  for (std::size_t j = 0; j < u.values.size(); ++j) {
    u.values[j] = amp * Complex(std::cos(k * x[j]), std::sin(k * x[j]));
  }
  return u;
}

inline ComplexField constant_field(const GridPtr& grid, Complex value) {
  ComplexField u(grid);
  for (Complex& v : u.values) v = value;
  return u;
}

inline ComplexField gaussian_field(const GridPtr& grid, double amp,
                                   double center, double width) {
  ComplexField u(grid);
  const auto& x = grid->points();
  for (std::size_t j = 0; j < u.values.size(); ++j) {
    const double d = x[j] - center;
    u.values[j] = Complex(amp * std::exp(-d * d / (2.0 * width * width)), 0.0);
  }
  return u;
}

}  // namespace nlsa::test
