#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace nlsa {

/// Uniform periodic grid on the centered box [-L/2, L/2).
///
/// Collocation points are x_j = -L/2 + j*dx, j = 0..n-1, dx = L/n.
/// Wavenumbers follow FFT storage order (m = 0..n/2-1, then -n/2..-1)
/// with k_m = 2*pi*m/L; the Nyquist slot carries k = -pi*n/L.
class Grid {
 public:
  /// Throws std::invalid_argument unless n_points is a power of two >= 8
  /// and length > 0.
  Grid(std::size_t n_points, double length);

  std::size_t n_points() const { return n_points_; }
  double length() const { return length_; }
  double dx() const { return dx_; }

  /// Wavenumber per FFT storage slot.
  const std::vector<double>& wavenumbers() const { return wavenumbers_; }
  /// Collocation point per slot.
  const std::vector<double>& points() const { return points_; }

  /// Signed mode index of storage slot j (0..n/2-1 keep their index,
  /// the upper half maps to -n/2..-1).
  int mode_of(std::size_t j) const {
    return j < n_points_ / 2 ? static_cast<int>(j)
                             : static_cast<int>(j) - static_cast<int>(n_points_);
  }
  /// Storage slot of a signed mode index; throws if |mode| out of range.
  std::size_t index_of(int mode) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_points_ == b.n_points_ && a.length_ == b.length_;
  }

 private:
  std::size_t n_points_;
  double length_;
  double dx_;
  std::vector<double> wavenumbers_;
  std::vector<double> points_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(std::size_t n_points, double length);

}  // namespace nlsa
