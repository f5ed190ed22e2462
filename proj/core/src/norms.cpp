#include "nlsa/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace nlsa {

namespace {

// Trapezoid weight of frame i in a trajectory of n frames.
double time_weight(std::size_t i, std::size_t n, double dt) {
  if (n < 2) return 0.0;
  return (i == 0 || i + 1 == n) ? 0.5 * dt : dt;
}

}  // namespace

NormReport make_norm_report(std::string name, double value,
                            const SpaceTimeField& traj) {
  return NormReport{std::move(name), value, traj.grid->n_points(),
                    traj.grid->length(), traj.dt_sample, traj.duration()};
}

double lp_space_time(const SpaceTimeField& traj, double p) {
  if (p < 1.0) throw std::invalid_argument("not a norm");
  const double dx = traj.grid->dx();
  const std::size_t n_frames = traj.frames.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n_frames; ++i) {
    const double w = time_weight(i, n_frames, traj.dt_sample) * dx;
    double frame_sum = 0.0;
    for (const Complex& v : traj.frames[i].values) {
      frame_sum += std::pow(std::abs(v), p);
    }
    sum += w * frame_sum;
  }
  return std::pow(sum, 1.0 / p);
}

double mixed_linf_x_l2_t(const SpaceTimeField& traj) {
  const std::size_t n_frames = traj.frames.size();
  if (n_frames == 0) return 0.0;
  const std::size_t n = traj.grid->n_points();
  std::vector<double> per_point(n, 0.0);
  for (std::size_t i = 0; i < n_frames; ++i) {
    const double w = time_weight(i, n_frames, traj.dt_sample);
    for (std::size_t j = 0; j < n; ++j) {
      per_point[j] += w * std::norm(traj.frames[i].values[j]);
    }
  }
  double max_sq = 0.0;
  for (double s : per_point) max_sq = std::max(max_sq, s);
  return std::sqrt(max_sq);
}

double local_h_half_l2t(const SpaceTimeField& traj,
                        std::pair<double, double> k_interval) {
  const auto [a, b] = k_interval;
  if (!(a < b)) throw std::invalid_argument("empty interval");
  const Grid& grid = *traj.grid;
  if (a < -0.5 * grid.length() || b > 0.5 * grid.length()) {
    throw std::invalid_argument("interval not inside the box");
  }
  const double dx = grid.dx();
  const auto& x = grid.points();
  const std::size_t n_frames = traj.frames.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n_frames; ++i) {
    const double w = time_weight(i, n_frames, traj.dt_sample);
    const ComplexField half = half_derivative(traj.frames[i]);
    double restricted = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < a || x[j] > b) continue;
      restricted += std::norm(traj.frames[i].values[j]) + std::norm(half.values[j]);
    }
    sum += w * restricted * dx;
  }
  return std::sqrt(sum);
}

Complex pairing(const ComplexField& u, const ComplexField& phi) {
  return inner_product(u, phi);
}

HolderChainReport holder_chain_check(const SpaceTimeField& traj) {
  HolderChainReport report;
  const double n_18_5 = lp_space_time(traj, 18.0 / 5.0);
  report.lhs = n_18_5 * n_18_5 * n_18_5;
  const double n_2 = lp_space_time(traj, 2.0);
  const double n_6 = lp_space_time(traj, 6.0);
  report.rhs = n_2 * n_6 * n_6;
  report.ok = report.lhs <= report.rhs * (1.0 + 1e-10);
  return report;
}

}  // namespace nlsa
