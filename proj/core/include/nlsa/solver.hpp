#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nlsa/field.hpp"

namespace nlsa {

/// Parameters of the damped, forced cubic Schroedinger evolution
///   u_t + gamma*u + i u_xx + i |u|^2 u = f,   f independent of t.
struct SolverParams {
  double gamma = 0.0;        ///< damping coefficient, 1/time
  ComplexField forcing;      ///< f, on the evolved state's grid
  double dt = 0.0;           ///< time step
  double t_final = 0.0;      ///< integration horizon
  std::size_t record_every = 1;  ///< keep a frame every k-th step
  bool dealias = false;      ///< optional 2/3-rule truncation, stress tests

  /// Throws std::invalid_argument on any violated constraint.
  void validate() const;
};

/// Per-step bookkeeping of the discrete mass balance
///   d/dt ||u||^2 + 2 gamma ||u||^2 = 2 Re<f, u>.
struct StepDiagnostics {
  double t = 0.0;
  double mass = 0.0;              ///< ||u(t)||^2
  double balance_residual = 0.0;  ///< centered-difference defect of the balance
  double linf = 0.0;              ///< max pointwise modulus
};

/// Raised when the state stops being finite; carries the diagnostics
/// gathered up to the failing step.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double t, std::vector<StepDiagnostics> partial);
  double time() const { return t_; }
  const std::vector<StepDiagnostics>& diagnostics() const { return partial_; }

 private:
  double t_;
  std::vector<StepDiagnostics> partial_;
};

/// Exact flow of the linear part u_t = -i u_xx - gamma u + f over time h:
/// mode-wise  c_k(h) = e^{(i k^2 - gamma) h} c_k(0) + phi_k(h) f_k  with
/// phi_k = (e^{(i k^2 - gamma) h} - 1)/(i k^2 - gamma), limit h at the
/// removable point gamma = 0, k = 0.
ComplexField linear_substep(const ComplexField& u, const SolverParams& params,
                            double h);

/// Exact flow of u_t = -i |u|^2 u over h: pointwise phase rotation
/// u(x) e^{-i |u(x)|^2 h}. Preserves |u(x)| pointwise, hence the mass.
ComplexField nonlinear_substep(const ComplexField& u, double h);

/// Strang composition B(dt/2) A(dt) B(dt/2) with A the linear substep and
/// B the nonlinear one; globally second order.
ComplexField strang_step(const ComplexField& u, const SolverParams& params);

struct Trajectory {
  SpaceTimeField frames;                    ///< recorded every record_every steps
  std::vector<StepDiagnostics> diagnostics; ///< one entry per step plus t = 0
  ComplexField final_state;                 ///< state at t_final (partial steps included)
  double t_final = 0.0;                     ///< time actually reached
  double max_tail_ratio = 0.0;              ///< resolution monitor over sampled frames
};

/// Repeated strang_step from t = 0 to t_final; a shorter final step covers
/// any remainder (kept out of `frames` so their spacing stays uniform).
/// Throws BlowupError on non-finite state.
Trajectory integrate(const ComplexField& u0, const SolverParams& params);

/// Exact solution A(t) e^{i k x} of the full equation with f = 0, where
/// k = 2 pi mode_index / L:
///   A(t) = a0 e^{-gamma t} exp(i [k^2 t - |a0|^2 (1 - e^{-2 gamma t})/(2 gamma)])
/// and the gamma -> 0 limit a0 exp(i [k^2 - |a0|^2] t).
ComplexField plane_wave_reference(Complex a0, int mode_index, const GridPtr& grid,
                                  double gamma, double t);

/// Max over recorded frames t_n of the defect of the integral form
///   u(t) = U(t) u0 - i int_0^t U(t-s) |u|^2 u ds
/// with trapezoid quadrature over the frames. Only meaningful for
/// gamma = 0, f = 0 runs; params supply that metadata and are checked.
double duhamel_residual(const SpaceTimeField& traj, const ComplexField& u0,
                        const SolverParams& params);

}  // namespace nlsa
