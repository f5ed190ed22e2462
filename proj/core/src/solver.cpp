#include "nlsa/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "nlsa/spectral.hpp"

namespace nlsa {

namespace {

// phi(z) = (e^z - 1)/z with the series used near the removable singularity.
Complex phi1(Complex z) {
  if (std::abs(z) < 1e-4) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
  }
  return (std::exp(z) - 1.0) / z;
}

// Mode-wise data of the exact linear flow over a fixed step h.
struct LinearPropagator {
  std::vector<Complex> factor;  // e^{(i k^2 - gamma) h}
  std::vector<Complex> source;  // phi1(z) h f_k, the forced particular part
  bool dealias = false;
  std::vector<bool> keep;       // 2/3-rule mask, used only when dealias

  LinearPropagator(const Grid& grid, double gamma,
                   const ComplexField& forcing_coeffs, double h, bool dealias_on) {
    const std::size_t n = grid.n_points();
    const auto& k = grid.wavenumbers();
    factor.resize(n);
    source.resize(n);
    dealias = dealias_on;
    if (dealias) {
      keep.resize(n);
      const int cutoff = static_cast<int>(n / 3);
      for (std::size_t j = 0; j < n; ++j) {
        keep[j] = std::abs(grid.mode_of(j)) <= cutoff;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z(-gamma * h, k[j] * k[j] * h);
      factor[j] = std::exp(z);
      source[j] = phi1(z) * h * forcing_coeffs.values[j];
    }
  }

  ComplexField apply(const ComplexField& u) const {
    ComplexField coeffs = forward_dft(u);
    for (std::size_t j = 0; j < coeffs.values.size(); ++j) {
      coeffs.values[j] = factor[j] * coeffs.values[j] + source[j];
      if (dealias && !keep[j]) coeffs.values[j] = Complex(0.0, 0.0);
    }
    return inverse_dft(coeffs);
  }
};

ComplexField strang_step_with(const ComplexField& u, const LinearPropagator& lin,
                              double h) {
  ComplexField v = nonlinear_substep(u, 0.5 * h);
  v = lin.apply(v);
  return nonlinear_substep(v, 0.5 * h);
}

double balance_residual(double mass_old, double mass_new,
                        const ComplexField& u_old, const ComplexField& u_new,
                        double gamma, const ComplexField& forcing, double h) {
  const ComplexField mid = 0.5 * (u_old + u_new);
  const double drive = 2.0 * inner_product(forcing, mid).real();
  return (mass_new - mass_old) / h + gamma * (mass_old + mass_new) - drive;
}

}  // namespace

void SolverParams::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (dt > t_final) throw std::invalid_argument("dt must not exceed t_final");
  if (record_every < 1) throw std::invalid_argument("record_every must be >= 1");
  if (gamma < 0.0) throw std::invalid_argument("gamma must be nonnegative");
  if (!forcing.grid) throw std::invalid_argument("forcing field missing");
}

BlowupError::BlowupError(double t, std::vector<StepDiagnostics> partial)
    : std::runtime_error([t] {
        std::ostringstream oss;
        oss << "blow-up or instability at t=" << t;
        return oss.str();
      }()),
      t_(t),
      partial_(std::move(partial)) {}

ComplexField linear_substep(const ComplexField& u, const SolverParams& params,
                            double h) {
  if (!(h > 0.0)) throw std::invalid_argument("substep size must be positive");
  require_same_grid(u, params.forcing);
  const LinearPropagator lin(*u.grid, params.gamma, forward_dft(params.forcing),
                             h, params.dealias);
  return lin.apply(u);
}

ComplexField nonlinear_substep(const ComplexField& u, double h) {
  ComplexField out = u;
  for (Complex& v : out.values) {
    const double theta = -std::norm(v) * h;
    v *= Complex(std::cos(theta), std::sin(theta));
  }
  return out;
}

ComplexField strang_step(const ComplexField& u, const SolverParams& params) {
  params.validate();
  require_same_grid(u, params.forcing);
  const LinearPropagator lin(*u.grid, params.gamma, forward_dft(params.forcing),
                             params.dt, params.dealias);
  return strang_step_with(u, lin, params.dt);
}

Trajectory integrate(const ComplexField& u0, const SolverParams& params) {
  params.validate();
  require_same_grid(u0, params.forcing);

  Trajectory out;
  out.frames.grid = u0.grid;
  out.frames.dt_sample = params.dt * static_cast<double>(params.record_every);
  out.frames.t0 = 0.0;
  out.frames.frames.push_back(u0);
  out.diagnostics.push_back({0.0, mass(u0), 0.0, linf_norm(u0)});

  const ComplexField forcing_coeffs = forward_dft(params.forcing);
  const LinearPropagator lin(*u0.grid, params.gamma, forcing_coeffs, params.dt,
                             params.dealias);

  const double n_exact = params.t_final / params.dt;
  std::size_t n_full = static_cast<std::size_t>(std::floor(n_exact + 1e-9));
  double remainder = params.t_final - static_cast<double>(n_full) * params.dt;
  if (remainder < 1e-9 * params.dt) remainder = 0.0;

  ComplexField state = u0;
  double m_old = out.diagnostics.front().mass;
  for (std::size_t s = 1; s <= n_full; ++s) {
    ComplexField next = strang_step_with(state, lin, params.dt);
    const double t = params.dt * static_cast<double>(s);
    const double m_new = mass(next);
    const double linf = linf_norm(next);
    out.diagnostics.push_back(
        {t, m_new,
         balance_residual(m_old, m_new, state, next, params.gamma,
                          params.forcing, params.dt),
         linf});
    if (!std::isfinite(m_new) || !std::isfinite(linf)) {
      throw BlowupError(t, std::move(out.diagnostics));
    }
    if (s % params.record_every == 0) out.frames.frames.push_back(next);
    state = std::move(next);
    m_old = m_new;
  }

  double t_reached = params.dt * static_cast<double>(n_full);
  if (remainder > 0.0) {
    const LinearPropagator lin_tail(*u0.grid, params.gamma, forcing_coeffs,
                                    remainder, params.dealias);
    ComplexField next = strang_step_with(state, lin_tail, remainder);
    const double m_new = mass(next);
    const double linf = linf_norm(next);
    out.diagnostics.push_back(
        {params.t_final, m_new,
         balance_residual(m_old, m_new, state, next, params.gamma,
                          params.forcing, remainder),
         linf});
    if (!std::isfinite(m_new) || !std::isfinite(linf)) {
      throw BlowupError(params.t_final, std::move(out.diagnostics));
    }
    state = std::move(next);
    t_reached = params.t_final;
  }

  out.final_state = std::move(state);
  out.t_final = t_reached;

  // Resolution monitor over a bounded sample of the recorded frames.
  const std::size_t n_frames = out.frames.frames.size();
  const std::size_t stride = std::max<std::size_t>(1, n_frames / 32);
  for (std::size_t i = 0; i < n_frames; i += stride) {
    out.max_tail_ratio =
        std::max(out.max_tail_ratio, spectral_tail_ratio(out.frames.frames[i]));
  }
  out.max_tail_ratio =
      std::max(out.max_tail_ratio, spectral_tail_ratio(out.final_state));
  return out;
}

ComplexField plane_wave_reference(Complex a0, int mode_index, const GridPtr& grid,
                                  double gamma, double t) {
  const double k =
      2.0 * std::numbers::pi * static_cast<double>(mode_index) / grid->length();
  const double amp_sq = std::norm(a0);
  // (1 - e^{-2 gamma t})/(2 gamma) -> t as gamma -> 0; expm1 keeps the
  // small-gamma branch accurate.
  const double decay_integral =
      gamma > 0.0 ? -std::expm1(-2.0 * gamma * t) / (2.0 * gamma) : t;
  const double theta = k * k * t - amp_sq * decay_integral;
  const Complex amplitude =
      a0 * std::exp(-gamma * t) * Complex(std::cos(theta), std::sin(theta));

  ComplexField out(grid);
  const auto& x = grid->points();
  for (std::size_t j = 0; j < out.values.size(); ++j) {
    out.values[j] = amplitude * Complex(std::cos(k * x[j]), std::sin(k * x[j]));
  }
  return out;
}

double duhamel_residual(const SpaceTimeField& traj, const ComplexField& u0,
                        const SolverParams& params) {
  if (params.gamma != 0.0 || l2_norm(params.forcing) != 0.0) {
    throw std::invalid_argument(
        "duhamel residual requires a gamma = 0, f = 0 trajectory");
  }
  if (traj.t0 != 0.0) {
    throw std::invalid_argument("duhamel residual requires t0 = 0");
  }
  if (traj.frames.empty()) return 0.0;
  require_same_grid(traj.frames.front(), u0);

  const Grid& grid = *traj.grid;
  const std::size_t n = grid.n_points();
  const auto& k = grid.wavenumbers();
  const double dt = traj.dt_sample;

  const ComplexField u0_coeffs = forward_dft(u0);

  // Running trapezoid of g(s) = e^{-i k^2 s} N(s) with N = |u|^2 u, so that
  // the Duhamel integral at t_n is e^{+i k^2 t_n} S_n mode-wise.
  std::vector<Complex> integral(n, Complex(0.0, 0.0));
  std::vector<Complex> g_prev(n);
  double residual_max = 0.0;

  for (std::size_t i = 0; i < traj.frames.size(); ++i) {
    const ComplexField& frame = traj.frames[i];
    ComplexField cubic(frame.grid);
    for (std::size_t j = 0; j < n; ++j) {
      cubic.values[j] = std::norm(frame.values[j]) * frame.values[j];
    }
    const ComplexField cubic_coeffs = forward_dft(cubic);
    const ComplexField frame_coeffs = forward_dft(frame);

    const double t = traj.t_of(i);
    double sum_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ph = -k[j] * k[j] * t;
      const Complex g =
          Complex(std::cos(ph), std::sin(ph)) * cubic_coeffs.values[j];
      if (i > 0) integral[j] += 0.5 * dt * (g_prev[j] + g);
      g_prev[j] = g;

      const Complex back(std::cos(-ph), std::sin(-ph));  // e^{+i k^2 t}
      const Complex residual =
          frame_coeffs.values[j] -
          back * (u0_coeffs.values[j] - Complex(0.0, 1.0) * integral[j]);
      sum_sq += std::norm(residual);
    }
    residual_max = std::max(residual_max, std::sqrt(grid.length() * sum_sq));
  }
  return residual_max;
}

}  // namespace nlsa
