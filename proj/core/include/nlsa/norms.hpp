#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlsa/field.hpp"
#include "nlsa/spectral.hpp"

namespace nlsa {

/// Named scalar produced by a norm evaluation, with the discretization it
/// was computed on.
struct NormReport {
  std::string name;
  double value = 0.0;
  std::size_t n_points = 0;
  double length = 0.0;
  double dt_sample = 0.0;
  double T = 0.0;
};

NormReport make_norm_report(std::string name, double value,
                            const SpaceTimeField& traj);

/// Space-time L^p over the recorded window: trapezoid in t (half weight on
/// first/last frame), rectangle-rule dx in x. Throws "not a norm" if p < 1.
double lp_space_time(const SpaceTimeField& traj, double p);

/// max over grid points x of sqrt(int |u(x,t)|^2 dt), trapezoid in t.
double mixed_linf_x_l2_t(const SpaceTimeField& traj);

/// sqrt(int_0^T ||u(t)||^2_{L2(K)} + ||D^{1/2}u(t)||^2_{L2(K)} dt) for the
/// interval K = [a, b]; the half-derivative is taken globally (spectrally)
/// and then restricted. Throws on an empty or out-of-box interval.
double local_h_half_l2t(const SpaceTimeField& traj,
                        std::pair<double, double> k_interval);

/// Weak-topology probe <u, phi>; delegates to inner_product.
Complex pairing(const ComplexField& u, const ComplexField& phi);

struct HolderChainReport {
  double lhs = 0.0;  ///< ||u||^3_{L^{18/5}} = ||u^3||_{L^{6/5}}
  double rhs = 0.0;  ///< ||u||_{L^2} ||u||^2_{L^6}
  bool ok = false;   ///< lhs <= rhs (1 + 1e-10); constant-1 interpolation
};

/// Checks the interpolation chain between the L^2, L^{18/5} and L^6
/// space-time norms; holds with constant 1 on any weighted grid, so ok
/// must always come back true.
HolderChainReport holder_chain_check(const SpaceTimeField& traj);

}  // namespace nlsa
