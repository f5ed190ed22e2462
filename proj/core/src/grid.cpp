#include "nlsa/grid.hpp"

#include <numbers>
#include <stdexcept>

namespace nlsa {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(std::size_t n_points, double length)
    : n_points_(n_points), length_(length) {
  if (n_points < 8 || !is_power_of_two(n_points)) {
    throw std::invalid_argument("grid size must be a power of two >= 8");
  }
  if (!(length > 0.0)) {
    throw std::invalid_argument("grid length must be positive");
  }
  dx_ = length_ / static_cast<double>(n_points_);
  wavenumbers_.resize(n_points_);
  points_.resize(n_points_);
  const double k_unit = 2.0 * std::numbers::pi / length_;
  for (std::size_t j = 0; j < n_points_; ++j) {
    wavenumbers_[j] = k_unit * static_cast<double>(mode_of(j));
    points_[j] = -0.5 * length_ + dx_ * static_cast<double>(j);
  }
}

std::size_t Grid::index_of(int mode) const {
  const int half = static_cast<int>(n_points_ / 2);
  if (mode < -half || mode >= half) {
    throw std::invalid_argument("mode index out of range for grid");
  }
  return mode >= 0 ? static_cast<std::size_t>(mode)
                   : n_points_ - static_cast<std::size_t>(-mode);
}

GridPtr make_grid(std::size_t n_points, double length) {
  return std::make_shared<const Grid>(n_points, length);
}

}  // namespace nlsa
