#include "nlsa/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nlsa {

ComplexField::ComplexField(GridPtr g, std::vector<Complex> v)
    : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->n_points()) {
    throw std::invalid_argument("field length does not match grid");
  }
}

ComplexField zero_field(GridPtr grid) { return ComplexField(std::move(grid)); }

bool same_grid(const ComplexField& a, const ComplexField& b) {
  return a.grid && b.grid && *a.grid == *b.grid;
}

void require_same_grid(const ComplexField& a, const ComplexField& b) {
  if (!same_grid(a, b)) {
    throw std::invalid_argument("incompatible grids");
  }
}

bool all_finite(const ComplexField& u) {
  for (const Complex& v : u.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  ComplexField out = a;
  for (std::size_t j = 0; j < out.values.size(); ++j) out.values[j] += b.values[j];
  return out;
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  ComplexField out = a;
  for (std::size_t j = 0; j < out.values.size(); ++j) out.values[j] -= b.values[j];
  return out;
}

ComplexField operator*(Complex c, const ComplexField& u) {
  ComplexField out = u;
  for (Complex& v : out.values) v *= c;
  return out;
}

ComplexField modulate(const ComplexField& g, int mode) {
  const double k =
      2.0 * std::numbers::pi * static_cast<double>(mode) / g.grid->length();
  ComplexField out = g;
  const auto& x = g.grid->points();
  for (std::size_t j = 0; j < out.values.size(); ++j) {
    out.values[j] *= Complex(std::cos(k * x[j]), std::sin(k * x[j]));
  }
  return out;
}

}  // namespace nlsa
