#include "nlsa/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nlsa/norms.hpp"
#include "nlsa/spectral.hpp"

namespace nlsa {

DecayEnvelopeResult decay_envelope_check(
    const std::vector<StepDiagnostics>& diagnostics, double gamma,
    double f_norm, double u0_norm, double dt, double c_tol) {
  if (!(gamma > 0.0)) throw std::invalid_argument("envelope requires damping");
  if (diagnostics.empty()) {
    throw std::invalid_argument("envelope check needs a recorded trajectory");
  }

  DecayEnvelopeResult result;
  result.tol = c_tol * dt * dt;
  const double m0 = u0_norm * u0_norm;
  const double forcing_level = f_norm * f_norm / (gamma * gamma);
  double worst = -std::numeric_limits<double>::infinity();
  for (const StepDiagnostics& d : diagnostics) {
    const double decay = std::exp(-gamma * d.t);
    const double envelope = decay * m0 + (1.0 - decay) * forcing_level;
    worst = std::max(worst, d.mass - envelope);
  }
  result.max_violation = worst;
  result.ok = worst <= result.tol;
  return result;
}

AbsorbingBallReport absorbing_entry(
    const std::vector<StepDiagnostics>& diagnostics, double gamma,
    double f_norm) {
  if (!(gamma > 0.0)) throw std::invalid_argument("absorbing ball requires damping");
  if (diagnostics.empty()) {
    throw std::invalid_argument("absorbing ball needs a recorded trajectory");
  }

  AbsorbingBallReport report;
  report.m0 = 2.0 * f_norm / gamma;
  report.mass_series.reserve(diagnostics.size());
  for (const StepDiagnostics& d : diagnostics) {
    report.mass_series.emplace_back(d.t, std::sqrt(d.mass));
  }

  // Earliest time after which the norm never exceeds M0 again; scanned
  // from the tail so a temporary excursion resets the entry point.
  std::size_t first_inside = report.mass_series.size();
  for (std::size_t i = report.mass_series.size(); i-- > 0;) {
    if (report.mass_series[i].second <= report.m0) {
      first_inside = i;
    } else {
      break;
    }
  }
  if (first_inside < report.mass_series.size()) {
    report.entry_time = report.mass_series[first_inside].first;
  }

  const double u0_norm = report.mass_series.front().second;
  if (u0_norm > report.m0 && f_norm > 0.0) {
    report.predicted_bound =
        std::log(gamma * gamma * u0_norm * u0_norm / (3.0 * f_norm * f_norm)) /
        gamma;
  } else {
    report.predicted_bound = 0.0;
  }
  return report;
}

std::vector<SmoothingRatioRow> smoothing_ratio(const ComplexField& u0, double T,
                                               const std::vector<double>& scales,
                                               double dt,
                                               std::size_t record_every) {
  SolverParams params;
  params.gamma = 0.0;
  params.forcing = zero_field(u0.grid);
  params.dt = dt;
  params.t_final = T;
  params.record_every = record_every;

  const double base_norm = l2_norm(u0);
  std::vector<SmoothingRatioRow> table;
  table.reserve(scales.size());
  for (double lambda : scales) {
    SmoothingRatioRow row;
    row.lambda = lambda;
    if (lambda == 0.0 || base_norm == 0.0) {
      table.push_back(row);
      continue;
    }
    const Trajectory traj = integrate(lambda * u0, params);
    SpaceTimeField smoothed = traj.frames;
    for (ComplexField& frame : smoothed.frames) frame = half_derivative(frame);
    row.norm = mixed_linf_x_l2_t(smoothed);
    const double scaled = lambda * base_norm;
    row.fitted_c = row.norm / (scaled + scaled * scaled * scaled);
    table.push_back(row);
  }
  return table;
}

namespace {

// Frame index of time `t`, which must sit on the lattice t0 + i dt_sample.
std::size_t frame_index_at(const SpaceTimeField& traj, double t,
                           const char* what) {
  const double offset = (t - traj.t0) / traj.dt_sample;
  const double rounded = std::round(offset);
  if (rounded < 0.0 || rounded >= static_cast<double>(traj.frames.size()) ||
      std::abs(offset - rounded) > 1e-6) {
    std::ostringstream oss;
    oss << what << " window out of range: t=" << t
        << " not on the recorded lattice";
    throw std::invalid_argument(oss.str());
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

BallIdentityReport ball_energy_identity(const SpaceTimeField& traj, double gamma,
                                        const ComplexField& f, double t,
                                        double tau) {
  if (tau < 0.0) throw std::invalid_argument("tau must be nonnegative");
  if (t - tau < traj.t0 - 1e-9 * traj.dt_sample) {
    throw std::invalid_argument("ball identity window out of range");
  }
  const std::size_t idx_t = frame_index_at(traj, t, "ball identity");
  const std::size_t idx_past = frame_index_at(traj, t - tau, "ball identity");
  const std::size_t steps = idx_t - idx_past;

  BallIdentityReport report;
  report.tau = tau;
  report.t = t;
  report.lhs = mass(traj.frames[idx_t]);

  // Trapezoid over s = j dt_sample of e^{-2 gamma s} 2 Re<f, u(t - s)>.
  double integral = 0.0;
  const double dt = traj.dt_sample;
  for (std::size_t j = 0; j <= steps; ++j) {
    const double s = dt * static_cast<double>(j);
    const double integrand =
        std::exp(-2.0 * gamma * s) *
        2.0 * inner_product(f, traj.frames[idx_t - j]).real();
    const double w = (j == 0 || j == steps) ? 0.5 : 1.0;
    if (steps > 0) integral += w * dt * integrand;
  }
  report.rhs =
      std::exp(-2.0 * gamma * tau) * mass(traj.frames[idx_past]) + integral;
  report.residual = std::abs(report.lhs - report.rhs);
  return report;
}

WeakContinuityReport weak_continuity_probe(const ComplexField& u0,
                                           const ComplexField& g,
                                           const ComplexField& phi,
                                           const SolverParams& params,
                                           const std::vector<int>& mode_list) {
  require_same_grid(u0, g);
  require_same_grid(u0, phi);
  const std::size_t n = u0.grid->n_points();
  for (int mode : mode_list) {
    if (static_cast<std::size_t>(std::abs(mode)) >= n / 4) {
      throw std::invalid_argument("unresolved modulation");
    }
  }

  const Trajectory base = integrate(u0, params);

  WeakContinuityReport report;
  report.mode_list = mode_list;
  for (int mode : mode_list) {
    const Trajectory perturbed = integrate(u0 + modulate(g, mode), params);
    double gap = 0.0;
    const std::size_t frames =
        std::min(base.frames.frames.size(), perturbed.frames.frames.size());
    for (std::size_t i = 0; i < frames; ++i) {
      const Complex p =
          pairing(perturbed.frames.frames[i] - base.frames.frames[i], phi);
      gap = std::max(gap, std::abs(p));
    }
    report.pairing_gap.push_back(gap);
    report.strong_gap.push_back(
        l2_norm(perturbed.final_state - base.final_state));
  }
  return report;
}

OmegaLimitSample omega_limit_sample(const ComplexField& u0,
                                    const SolverParams& params, double t_star,
                                    std::size_t n_samples, double spacing) {
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  if (!(t_star > 0.0)) throw std::invalid_argument("t_star must be positive");
  const double spacing_steps = spacing / params.dt;
  if (n_samples > 1 &&
      (!(spacing > 0.0) ||
       std::abs(spacing_steps - std::round(spacing_steps)) > 1e-6)) {
    throw std::invalid_argument("spacing must be a multiple of dt");
  }

  const double f_norm = l2_norm(params.forcing);
  const double m0 = 2.0 * f_norm / params.gamma;

  // Reach t_star first and verify the trajectory has actually been
  // absorbed; the f = 0 ball is degenerate and skips the entry check.
  SolverParams to_star = params;
  to_star.t_final = t_star;
  const Trajectory approach = integrate(u0, to_star);
  if (f_norm > 0.0) {
    const AbsorbingBallReport entry =
        absorbing_entry(approach.diagnostics, params.gamma, f_norm);
    if (!entry.entry_time.has_value() || *entry.entry_time > t_star) {
      throw std::invalid_argument("sampling before absorption");
    }
  }

  OmegaLimitSample sample;
  sample.t_star = t_star;
  sample.snapshots.grid = u0.grid;
  sample.snapshots.t0 = t_star;
  sample.snapshots.dt_sample = spacing;
  sample.snapshots.frames.push_back(approach.final_state);
  if (n_samples > 1) {
    SolverParams onward = params;
    onward.t_final = spacing * static_cast<double>(n_samples - 1);
    onward.record_every = static_cast<std::size_t>(std::round(spacing_steps));
    const Trajectory rest = integrate(approach.final_state, onward);
    for (std::size_t i = 1; i < rest.frames.frames.size(); ++i) {
      sample.snapshots.frames.push_back(rest.frames.frames[i]);
    }
  }
  if (sample.snapshots.frames.size() != n_samples) {
    throw std::runtime_error("omega-limit sampling misaligned with dt lattice");
  }

  const double mass_bound = m0 * m0 * (1.0 + 1e-8) + kBallMassFloor;
  for (std::size_t i = 0; i < sample.snapshots.frames.size(); ++i) {
    const double m = mass(sample.snapshots.frames[i]);
    if (m > mass_bound) {
      std::ostringstream oss;
      oss << "omega-limit snapshot " << i << " outside the absorbing ball: "
          << "mass " << m << " > " << mass_bound;
      throw InvariantViolation(oss.str());
    }
  }

  const std::size_t count = sample.snapshots.frames.size();
  sample.pairwise_dist.assign(count, std::vector<double>(count, 0.0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double d =
          l2_norm(sample.snapshots.frames[i] - sample.snapshots.frames[j]);
      sample.pairwise_dist[i][j] = d;
      sample.pairwise_dist[j][i] = d;
      sample.diameter = std::max(sample.diameter, d);
    }
  }
  return sample;
}

}  // namespace nlsa
