#include "nlsa/spectral.hpp"

#include <array>
#include <thread>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "nlsa/random_field.hpp"

using namespace nlsa;
using namespace nlsa::test;

TEST_CASE("grid validation and layout") {
  CHECK_THROWS_AS(Grid(6, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(48, 1.0), std::invalid_argument);  // not a power of two
  CHECK_THROWS_AS(Grid(8, 0.0), std::invalid_argument);

  const auto grid = make_grid(16, 4.0);
  CHECK(grid->dx() * static_cast<double>(grid->n_points()) ==
        doctest::Approx(grid->length()).epsilon(1e-15));
  CHECK(grid->wavenumbers().size() == 16);
  CHECK(grid->wavenumbers()[0] == 0.0);
  CHECK(grid->mode_of(1) == 1);
  CHECK(grid->mode_of(15) == -1);
  CHECK(grid->mode_of(8) == -8);  // Nyquist slot
  CHECK(grid->index_of(-1) == 15);
  CHECK(grid->points().front() == doctest::Approx(-2.0));
}

TEST_CASE("forward dft: constant field is pure DC") {
  const auto grid = make_grid(32, 10.0);
  const auto coeffs = forward_dft(constant_field(grid, {1.0, 0.0}));
  CHECK(std::abs(coeffs.values[0] - Complex(1.0, 0.0)) < 1e-14);
  for (std::size_t j = 1; j < coeffs.values.size(); ++j) {
    CHECK(std::abs(coeffs.values[j]) < 1e-14);
  }
}

TEST_CASE("forward dft: pure mode lands in its slot with weight 1") {
  const auto grid = make_grid(64, 7.5);
  const auto coeffs = forward_dft(plane_wave(grid, 1, {1.0, 0.0}));
  for (std::size_t j = 0; j < coeffs.values.size(); ++j) {
    const Complex want = j == 1 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    CHECK(std::abs(coeffs.values[j] - want) < 1e-13);
  }
}

TEST_CASE("inverse dft trivial cases") {
  const auto grid = make_grid(16, 3.0);
  CHECK(l2_norm(inverse_dft(zero_field(grid))) == 0.0);

  ComplexField dc(grid);
  dc.values[0] = Complex(1.0, 0.0);
  const auto constant = inverse_dft(dc);
  for (const Complex& v : constant.values) {
    CHECK(std::abs(v - Complex(1.0, 0.0)) < 1e-14);
  }
}

TEST_CASE("dft round trip on random fields is 1e-12 tight") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    const auto grid = make_grid(256, 40.0);
    const auto u = random_field(grid, seed, 2.0);
    CHECK(rel_l2_error(inverse_dft(forward_dft(u)), u) < 1e-12);
  }
}

TEST_CASE("parseval ties physical and spectral mass") {
  const auto grid = make_grid(128, 25.0);
  const auto u = random_field(grid, 7, 1.5);
  const auto coeffs = forward_dft(u);
  double spectral = 0.0;
  for (const Complex& c : coeffs.values) spectral += std::norm(c);
  spectral *= grid->length();
  CHECK(std::abs(spectral - mass(u)) < 1e-12 * mass(u));
}

TEST_CASE("half derivative kills constants and scales eigenmodes") {
  const auto grid = make_grid(64, 2.0 * 3.141592653589793);
  CHECK(l2_norm(half_derivative(constant_field(grid, {3.0, -1.0}))) < 1e-13);

  const auto u = plane_wave(grid, 1, {1.0, 0.0});
  const double k1 = grid->wavenumbers()[1];
  const auto want = std::sqrt(std::abs(k1)) * u;
  CHECK(rel_l2_error(half_derivative(u), want) < 1e-13);
}

TEST_CASE("half derivative squared matches the |k| multiplier") {
  const auto grid = make_grid(128, 30.0);
  const auto u = random_field(grid, 11, 1.0);
  std::vector<Complex> abs_k(grid->n_points());
  for (std::size_t j = 0; j < abs_k.size(); ++j) {
    abs_k[j] = Complex(std::abs(grid->wavenumbers()[j]), 0.0);
  }
  const auto twice = half_derivative(half_derivative(u));
  const auto direct = apply_fourier_multiplier(u, abs_k);
  CHECK(rel_l2_error(twice, direct) < 1e-10);
}

TEST_CASE("free propagator: identity at t = 0, plane-wave phase, unitary") {
  const auto grid = make_grid(128, 16.0);
  const auto u = random_field(grid, 13, 1.0);
  CHECK(rel_l2_error(free_propagator(u, 0.0), u) < 1e-13);

  const double t = 0.7;
  const auto wave = plane_wave(grid, 3, {1.0, 0.0});
  const double k = grid->wavenumbers()[3];
  const Complex phase(std::cos(k * k * t), std::sin(k * k * t));
  CHECK(rel_l2_error(free_propagator(wave, t), phase * wave) < 1e-12);

  const double before = l2_norm(u);
  const double after = l2_norm(free_propagator(u, 0.37));
  CHECK(std::abs(after - before) < 1e-12 * before);
}

TEST_CASE("free propagator is a one-parameter group") {
  const auto grid = make_grid(128, 20.0);
  const auto u = random_field(grid, 17, 1.0);
  const auto split = free_propagator(free_propagator(u, 0.3), 0.45);
  const auto joint = free_propagator(u, 0.75);
  CHECK(rel_l2_error(split, joint) < 1e-11);
}

TEST_CASE("half derivative commutes with the free flow") {
  const auto grid = make_grid(128, 20.0);
  const auto u = random_field(grid, 19, 1.0);
  const auto a = half_derivative(free_propagator(u, 0.4));
  const auto b = free_propagator(half_derivative(u), 0.4);
  CHECK(rel_l2_error(a, b) < 1e-11);
}

TEST_CASE("inner product: hermitian, cauchy-schwarz, grid guard") {
  const auto grid = make_grid(64, 9.0);
  const auto u = random_field(grid, 23, 1.2);
  const auto v = random_field(grid, 29, 0.8);

  const Complex uu = inner_product(u, u);
  CHECK(uu.imag() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(uu.real() >= 0.0);

  CHECK(std::abs(inner_product(u, v)) <=
        l2_norm(u) * l2_norm(v) * (1.0 + 1e-12));

  const auto other = random_field(make_grid(64, 9.5), 1, 1.0);
  CHECK_THROWS_WITH_AS(inner_product(u, other), "incompatible grids",
                       std::invalid_argument);
}

TEST_CASE("l2 norm of the unit constant is sqrt(L)") {
  const double length = 12.5;
  const auto grid = make_grid(32, length);
  CHECK(l2_norm(constant_field(grid, {1.0, 0.0})) ==
        doctest::Approx(std::sqrt(length)).epsilon(1e-14));
}

TEST_CASE("transforms are safe to run from several threads") {
  const auto grid = make_grid(256, 40.0);
  std::vector<std::thread> workers;
  std::array<double, 4> worst{};
  for (std::size_t w = 0; w < worst.size(); ++w) {
    workers.emplace_back([&, w] {
      const auto u = random_field(grid, 100 + w, 1.0);
      double local = 0.0;
      for (int i = 0; i < 50; ++i) {
        local = std::max(local, rel_l2_error(inverse_dft(forward_dft(u)), u));
      }
      worst[w] = local;
    });
  }
  for (std::thread& t : workers) t.join();
  for (double w : worst) CHECK(w < 1e-12);
}

TEST_CASE("spectral tail ratio flags rough data and clears smooth data") {
  const auto grid = make_grid(128, 20.0);
  CHECK(spectral_tail_ratio(random_field(grid, 31, 1.0)) < 1e-10);

  ComplexField rough(grid);
  Lcg64 rng(5);
  for (Complex& v : rough.values) {
    v = Complex(rng.next_symmetric(), rng.next_symmetric());
  }
  CHECK(spectral_tail_ratio(rough) > 1e-2);
}
