#pragma once

#include <span>

#include "nlsa/field.hpp"

namespace nlsa {

/// Forward DFT. Carries the 1/n factor, so slot 0 is the mean of u.
/// Coefficients are taken against exp(i k x) on the centered box, so
/// u(x) = exp(i k_m x) maps to 1 in slot m exactly.
ComplexField forward_dft(const ComplexField& u);

/// Inverse of forward_dft: u(x_j) = sum_m c_m exp(i k_m x_j).
ComplexField inverse_dft(const ComplexField& coeffs);

/// inverse_dft(symbol_m * forward_dft(u)); symbol indexed by storage slot.
ComplexField apply_fourier_multiplier(const ComplexField& u,
                                      std::span<const Complex> symbol);

/// Fractional half-derivative D^{1/2}: multiplier |k|^{1/2}. The DC mode
/// is annihilated.
ComplexField half_derivative(const ComplexField& u);

/// Free Schroedinger group U(t) solving u_t = -i u_xx. With d_xx -> -k^2
/// each mode picks up the phase exp(+i k^2 t); the plus sign carries the
/// -i from the equation onto -(-k^2) = +k^2. Isometry on L^2.
ComplexField free_propagator(const ComplexField& u0, double t);

/// sum_j u_j conj(v_j) dx. Throws "incompatible grids" on grid mismatch.
Complex inner_product(const ComplexField& u, const ComplexField& v);

/// ||u||^2 = Re<u, u>.
double mass(const ComplexField& u);
double l2_norm(const ComplexField& u);
/// max_j |u_j| (collocation sup, a lower bound of the continuum sup).
double linf_norm(const ComplexField& u);

/// max |coeff| over the aliasing-prone band |mode| > n/3, divided by the
/// overall max |coeff|. 0 for the zero field. Values above ~1e-10 mean
/// the run is under-resolved for the cubic term.
double spectral_tail_ratio(const ComplexField& u);

}  // namespace nlsa
