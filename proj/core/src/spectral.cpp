#include "nlsa/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace nlsa {

namespace {

// FFTW planning is not thread-safe; executing distinct or identical plans
// through the new-array interface is. Plans are cached per transform size
// under a mutex and created FFTW_UNALIGNED so they run on any buffer.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

PlanPair plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t, PlanPair> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  fftw_complex* in = fftw_alloc_complex(n);
  fftw_complex* out = fftw_alloc_complex(n);
  PlanPair plans;
  plans.forward = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.backward = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  if (!plans.forward || !plans.backward) {
    throw std::runtime_error("fftw plan creation failed");
  }
  cache.emplace(n, plans);
  return plans;
}

fftw_complex* as_fftw(std::vector<Complex>& v) {
  return reinterpret_cast<fftw_complex*>(v.data());
}

std::vector<Complex> run_plan(fftw_plan plan, std::vector<Complex> in) {
  std::vector<Complex> out(in.size());
  fftw_execute_dft(plan, as_fftw(in), as_fftw(out));
  return out;
}

}  // namespace

ComplexField forward_dft(const ComplexField& u) {
  const std::size_t n = u.grid->n_points();
  ComplexField out(u.grid);
  out.values = run_plan(plans_for(n).forward, u.values);
  // Slot phase exp(-i k_m x_0) with x_0 = -L/2 is exactly (-1)^j, which
  // shifts the raw transform to coefficients on the centered box.
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] *= (j & 1) ? -inv_n : inv_n;
  }
  return out;
}

ComplexField inverse_dft(const ComplexField& coeffs) {
  const std::size_t n = coeffs.grid->n_points();
  std::vector<Complex> shifted = coeffs.values;
  for (std::size_t j = 1; j < n; j += 2) shifted[j] = -shifted[j];
  ComplexField out(coeffs.grid);
  out.values = run_plan(plans_for(n).backward, std::move(shifted));
  return out;
}

ComplexField apply_fourier_multiplier(const ComplexField& u,
                                      std::span<const Complex> symbol) {
  if (symbol.size() != u.grid->n_points()) {
    throw std::invalid_argument("multiplier length does not match grid");
  }
  ComplexField coeffs = forward_dft(u);
  for (std::size_t j = 0; j < symbol.size(); ++j) coeffs.values[j] *= symbol[j];
  return inverse_dft(coeffs);
}

ComplexField half_derivative(const ComplexField& u) {
  ComplexField coeffs = forward_dft(u);
  const auto& k = u.grid->wavenumbers();
  for (std::size_t j = 0; j < k.size(); ++j) {
    coeffs.values[j] *= std::sqrt(std::abs(k[j]));
  }
  return inverse_dft(coeffs);
}

ComplexField free_propagator(const ComplexField& u0, double t) {
  ComplexField coeffs = forward_dft(u0);
  const auto& k = u0.grid->wavenumbers();
  for (std::size_t j = 0; j < k.size(); ++j) {
    const double phase = k[j] * k[j] * t;
    coeffs.values[j] *= Complex(std::cos(phase), std::sin(phase));
  }
  return inverse_dft(coeffs);
}

Complex inner_product(const ComplexField& u, const ComplexField& v) {
  require_same_grid(u, v);
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < u.values.size(); ++j) {
    sum += u.values[j] * std::conj(v.values[j]);
  }
  return sum * u.grid->dx();
}

double mass(const ComplexField& u) {
  double sum = 0.0;
  for (const Complex& v : u.values) sum += std::norm(v);
  return sum * u.grid->dx();
}

double l2_norm(const ComplexField& u) { return std::sqrt(mass(u)); }

double linf_norm(const ComplexField& u) {
  double max_abs = 0.0;
  for (const Complex& v : u.values) max_abs = std::max(max_abs, std::abs(v));
  return max_abs;
}

double spectral_tail_ratio(const ComplexField& u) {
  ComplexField coeffs = forward_dft(u);
  const std::size_t n = u.grid->n_points();
  const int cutoff = static_cast<int>(n / 3);
  double peak = 0.0;
  double tail = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::abs(coeffs.values[j]);
    peak = std::max(peak, a);
    if (std::abs(u.grid->mode_of(j)) > cutoff) tail = std::max(tail, a);
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

}  // namespace nlsa
