#include "nlsa/attractor.hpp"

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "nlsa/norms.hpp"
#include "nlsa/random_field.hpp"
#include "nlsa/spectral.hpp"

using namespace nlsa;
using namespace nlsa::test;

namespace {

SolverParams forced_params(const GridPtr& grid, double gamma,
                           const ComplexField& forcing, double dt,
                           double t_final, std::size_t record_every = 1) {
  SolverParams p;
  p.gamma = gamma;
  p.forcing = forcing;
  p.dt = dt;
  p.t_final = t_final;
  p.record_every = record_every;
  return p;
}

}  // namespace

TEST_CASE("decay envelope: guard, unforced slack, forced saturation") {
  const auto grid = make_grid(128, 25.0);
  const auto u0 = random_field(grid, 3, 1.0);

  const auto free_traj =
      integrate(u0, forced_params(grid, 1.0, zero_field(grid), 1e-3, 3.0));
  CHECK_THROWS_WITH_AS(
      decay_envelope_check(free_traj.diagnostics, 0.0, 0.0, 1.0, 1e-3),
      "envelope requires damping", std::invalid_argument);

  // f = 0: mass decays at rate 2 gamma, twice as fast as the envelope, so
  // the worst violation sits at t = 0 where both sides coincide.
  const auto unforced =
      decay_envelope_check(free_traj.diagnostics, 1.0, 0.0, l2_norm(u0), 1e-3);
  CHECK(unforced.ok);
  CHECK(unforced.max_violation <= 1e-12);

  // u0 = 0: only the forcing term remains.
  const auto f = gaussian_field(grid, 0.5, 0.0, 2.0);
  const auto forced_traj =
      integrate(zero_field(grid), forced_params(grid, 1.0, f, 1e-3, 5.0));
  const auto forced = decay_envelope_check(forced_traj.diagnostics, 1.0,
                                           l2_norm(f), 0.0, 1e-3);
  CHECK(forced.ok);
}

TEST_CASE("decay envelope holds on forced random runs") {
  const auto grid = make_grid(128, 25.0);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    Lcg64 rng(seed * 101);
    const double gamma = 0.2 + 1.8 * rng.next_double();
    const auto u0 = random_field(grid, seed, 0.5 + 1.5 * rng.next_double());
    const auto f = random_field(grid, seed + 40, 0.2 + 0.8 * rng.next_double());
    const auto traj = integrate(u0, forced_params(grid, gamma, f, 1e-3, 5.0));
    const auto result = decay_envelope_check(traj.diagnostics, gamma, l2_norm(f),
                                             l2_norm(u0), 1e-3);
    CHECK(result.ok);
  }
}

TEST_CASE("absorbing entry: inside from the start and degenerate f = 0") {
  const auto grid = make_grid(128, 25.0);
  const auto f = gaussian_field(grid, 0.5, 0.0, 2.0);
  const double f_norm = l2_norm(f);
  const double m0 = 2.0 * f_norm;  // gamma = 1

  const auto small_start =
      integrate(random_field(grid, 5, 0.5 * m0),
                forced_params(grid, 1.0, f, 1e-3, 1.0));
  const auto inside = absorbing_entry(small_start.diagnostics, 1.0, f_norm);
  CHECK(inside.m0 == doctest::Approx(m0).epsilon(1e-15));
  REQUIRE(inside.entry_time.has_value());
  CHECK(*inside.entry_time == 0.0);
  CHECK(inside.predicted_bound == 0.0);

  const auto unforced = integrate(
      random_field(grid, 7, 1.0),
      forced_params(grid, 1.0, zero_field(grid), 1e-3, 1.0));
  const auto degenerate = absorbing_entry(unforced.diagnostics, 1.0, 0.0);
  CHECK(degenerate.m0 == 0.0);
  CHECK(!degenerate.entry_time.has_value());
}

TEST_CASE("absorbing entry beats the analytic bound") {
  const auto grid = make_grid(256, 50.0);
  const double gamma = 1.0;
  const double dt = 1e-3;
  const auto f = random_field(grid, 11, 1.0);
  const auto u0 = random_field(grid, 13, 20.0);  // 10 x the ball radius

  const auto traj = integrate(u0, forced_params(grid, gamma, f, dt, 6.0));
  const auto report = absorbing_entry(traj.diagnostics, gamma, 1.0);
  CHECK(report.predicted_bound ==
        doctest::Approx(std::log(400.0 / 3.0)).epsilon(1e-12));
  REQUIRE(report.entry_time.has_value());
  CHECK(*report.entry_time <= report.predicted_bound + dt);
}

TEST_CASE("ball energy identity: degenerate window and exact unforced decay") {
  const auto grid = make_grid(128, 25.0);
  const auto u0 = random_field(grid, 17, 1.0);
  const auto zero = zero_field(grid);
  const auto traj =
      integrate(u0, forced_params(grid, 0.7, zero, 1e-3, 2.0, 10));

  const auto degenerate =
      ball_energy_identity(traj.frames, 0.7, zero, 2.0, 0.0);
  CHECK(degenerate.residual <= 1e-12);

  const auto window = ball_energy_identity(traj.frames, 0.7, zero, 2.0, 1.5);
  CHECK(window.residual <= 1e-10);

  CHECK_THROWS_AS(ball_energy_identity(traj.frames, 0.7, zero, 2.0, 3.0),
                  std::invalid_argument);
}

TEST_CASE("ball energy identity residual drops at the quadrature order") {
  const auto grid = make_grid(128, 25.0);
  const auto u0 = random_field(grid, 19, 1.0);
  const auto f = gaussian_field(grid, 0.5, 0.0, 2.0);

  const auto residual_at = [&](std::size_t record_every) {
    const auto traj = integrate(
        u0, forced_params(grid, 1.0, f, 1e-3, 3.0, record_every));
    return ball_energy_identity(traj.frames, 1.0, f, 3.0, 1.0).residual;
  };
  const double coarse = residual_at(10);  // dt_sample = 1e-2
  const double fine = residual_at(5);     // dt_sample = 5e-3
  CHECK(coarse / fine > 3.3);
  CHECK(coarse / fine < 4.7);
}

TEST_CASE("weak continuity probe: zero bump, mode guard") {
  const auto grid = make_grid(128, 25.0);
  const auto u0 = gaussian_field(grid, 0.3, 0.0, 1.5);
  const auto phi = gaussian_field(grid, 1.0, 0.0, 1.5);
  const auto params = forced_params(grid, 0.0, zero_field(grid), 1e-2, 0.5, 10);

  const auto report = weak_continuity_probe(u0, zero_field(grid), phi, params,
                                            {4, 8});
  for (double gap : report.pairing_gap) CHECK(gap == 0.0);
  for (double gap : report.strong_gap) CHECK(gap == 0.0);

  CHECK_THROWS_WITH_AS(
      weak_continuity_probe(u0, zero_field(grid), phi, params, {40}),
      "unresolved modulation", std::invalid_argument);
}

TEST_CASE("modulated bumps pair weakly against a fixed smooth probe") {
  // Static non-stationary-phase check: no dynamics involved.
  const auto grid = make_grid(256, 50.0);
  const auto g = gaussian_field(grid, 1.0, 0.0, 1.0);
  const auto phi = gaussian_field(grid, 1.0, 0.0, 1.0);
  double previous = std::abs(pairing(modulate(g, 4), phi));
  for (int mode : {8, 16, 32}) {
    const double current = std::abs(pairing(modulate(g, mode), phi));
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("omega limit: unforced attractor collapses to the origin") {
  const auto grid = make_grid(128, 25.0);
  const auto u0 = random_field(grid, 23, 1.0);
  const auto params = forced_params(grid, 1.0, zero_field(grid), 1e-2, 1.0);
  const auto sample = omega_limit_sample(u0, params, 30.0, 4, 1.0);
  CHECK(sample.snapshots.frames.size() == 4);
  CHECK(sample.diameter <= 1e-6);
  CHECK(sample.pairwise_dist[0][3] == sample.pairwise_dist[3][0]);
}

TEST_CASE("omega limit refuses to sample before absorption") {
  const auto grid = make_grid(128, 25.0);
  const auto f = gaussian_field(grid, 0.5, 0.0, 2.0);
  const auto u0 = random_field(grid, 29, 20.0);
  const auto params = forced_params(grid, 1.0, f, 1e-2, 1.0);
  CHECK_THROWS_WITH_AS(omega_limit_sample(u0, params, 0.5, 2, 1.0),
                       "sampling before absorption", std::invalid_argument);
}

TEST_CASE("smoothing ratio: zero scale row and the linear limit") {
  const auto grid = make_grid(128, 25.0);
  const auto u0 = gaussian_field(grid, 1.0, 0.0, 1.0);
  const double dt = 5e-3;
  const std::size_t record_every = 5;
  const double T = 1.0;

  const auto table = smoothing_ratio(u0, T, {0.0, 1e-4}, dt, record_every);
  REQUIRE(table.size() == 2);
  CHECK(table[0].norm == 0.0);
  CHECK(table[0].fitted_c == 0.0);

  // Tiny data evolve linearly, so the fit must match the free flow's
  // empirical smoothing constant.
  const double lambda = 1e-4;
  SpaceTimeField free_traj;
  free_traj.grid = grid;
  free_traj.dt_sample = dt * static_cast<double>(record_every);
  free_traj.t0 = 0.0;
  const auto n_frames =
      static_cast<std::size_t>(std::llround(T / free_traj.dt_sample));
  for (std::size_t i = 0; i <= n_frames; ++i) {
    free_traj.frames.push_back(half_derivative(
        free_propagator(lambda * u0, free_traj.dt_sample * i)));
  }
  const double c_free =
      mixed_linf_x_l2_t(free_traj) / (lambda * l2_norm(u0));
  CHECK(table[1].fitted_c == doctest::Approx(c_free).epsilon(1e-6));
}
