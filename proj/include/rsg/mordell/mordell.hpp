#pragma once

#include "rsg/numkernel/complex.hpp"
#include "rsg/numkernel/quadrature.hpp"

#include <vector>

namespace rsg {

// The Mordell integral
//   Upsilon(u; tau) = int_{0 \ 1} exp(-pi i tau z^2 + 2 pi i u z) / (e^{2 pi i z} - 1) dz
// over the line through 1/2 with direction e^{3 pi i/4}, and its u-derivatives.
// tau must have positive real part.

// Upsilon^{(j)}(u; tau) for j = 0..kmax by direct quadrature along the line.
template <typename Real>
std::vector<Complex<Real>> upsilon_derivatives(const Complex<Real>& u, const Complex<Real>& tau, int kmax,
                                               const QuadratureSpec<Real>& spec = {});

template <typename Real>
Complex<Real> upsilon(const Complex<Real>& u, const Complex<Real>& tau, int k, const QuadratureSpec<Real>& spec = {});

// Upsilon^{(j)}(u; tau), j = 0..kmax, from quadrature at u - m - n tau and the
// shift relations
//   Upsilon(u+1)   = Upsilon(u) + tau^{-1/2} exp(pi i (u^2/tau + 3/4)),
//   Upsilon(u+tau) = exp(pi i (tau + 2u)) (Upsilon(u) - 1).
template <typename Real>
std::vector<Complex<Real>> upsilon_reduced(const Complex<Real>& u, const Complex<Real>& tau, int kmax, long long m,
                                           long long n, const QuadratureSpec<Real>& spec = {});

// The shift (m, n) that brings 2(u - m - n tau) - tau near zero.
template <typename Real>
std::pair<long long, long long> upsilon_reduction(const Complex<Real>& u, const Complex<Real>& tau);

// upsilon_reduced with the shift from upsilon_reduction.
template <typename Real>
std::vector<Complex<Real>> upsilon_auto(const Complex<Real>& u, const Complex<Real>& tau, int kmax,
                                        const QuadratureSpec<Real>& spec = {});

// G(u; tau) = tau^{1/4} exp(-pi i u^2/2 + pi i/8) Upsilon(sqrt(tau) u; tau) and
// its u-derivatives G^{(j)}, j = 0..kmax.
template <typename Real>
std::vector<Complex<Real>> g_derivatives(const Complex<Real>& u, const Complex<Real>& tau, int kmax,
                                         const QuadratureSpec<Real>& spec = {});

template <typename Real>
Complex<Real> g_value(const Complex<Real>& u, const Complex<Real>& tau, int k, const QuadratureSpec<Real>& spec = {});

// theta_k(u) = u^2/2 - sqrt(k) u - k/2 - 1/8.
template <typename Real>
Complex<Real> theta_k(const Complex<Real>& u, long long k);

template <typename Real>
struct RationalG {
    std::vector<Complex<Real>> derivatives;
    bool closed_form = true;  // false when the quadrature fallback was used
};

// G^{(j)}(u; m/n), j = 0..kmax, from the finite closed form. Within
// `singular_guard` of a zero of its denominator, falls back to quadrature.
template <typename Real>
RationalG<Real> g_rational(const Complex<Real>& u, long long m, long long n, int kmax,
                           const QuadratureSpec<Real>& spec = {}, double singular_guard = 1e-3);

// Psi(u) = cos(pi (u^2/2 - u - 1/8)) / cos(pi u) and its derivatives
// j = 0..kmax. Removable singularities at half-integers are handled by
// expanding about the nearest one.
template <typename Real>
std::vector<Complex<Real>> psi_classical(const Complex<Real>& u, int kmax);

} // namespace rsg
