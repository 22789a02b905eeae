#pragma once

#include "rsg/numkernel/complex.hpp"

namespace rsg {

// Principal branch of log Gamma, continuous off (-inf, 0]. Throws DomainError
// at the poles.
template <typename Real>
Complex<Real> log_gamma(const Complex<Real>& z);

// Gamma on the real line, with reflection for negative arguments.
template <typename Real>
Real gamma_real(const Real& x);

// log Gamma(s) ~ (s-1/2) log(it) - it + log(2 pi)/2
//               - sum_{k=1}^{N-1} (i/t)^k B_{k+1}(sigma)/(k(k+1)).
template <typename Real>
Complex<Real> log_gamma_asymptotic(const Complex<Real>& s, int n_terms);

// chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2).
template <typename Real>
Complex<Real> chi(const Complex<Real>& s);

// theta(s) from -2i theta(s) = (s-1/2) log pi + log Gamma((1-s)/2) - log Gamma(s/2).
// Defined off the real rays (-inf, 0] and [1, inf).
template <typename Real>
Complex<Real> theta_exact(const Complex<Real>& s);

// theta(s) from
//   i theta(s) ~ (s/2-1/4) log(|t|/2pi) - it/2 - sgn(t) i pi/8 - sum_{n=1}^{N-1} (2i/t)^n f_n(sigma).
template <typename Real>
Complex<Real> theta_asymptotic(const Complex<Real>& s, int n_terms);

// theta(1/2+it) ~ (t/2) log(|t|/2pi) - t/2 - sgn(t) pi/8
//                 - sum_{n=1}^{N-1} (-4)^{n-1} B_{2n}(1/4) / ((2n-1) n t^(2n-1)).
template <typename Real>
Real theta_critical_asymptotic(const Real& t, int n_terms);

// Gamma(s) ~ sqrt(2pi) exp(pi i s/2 - it - pi i/4) t^(s-1/2) sum_{m<L} gamma_m(sigma)/t^m, t > 0.
template <typename Real>
Complex<Real> gamma_asymptotic(const Complex<Real>& s, int n_terms);

// sum_{m<L} u_m(sigma)/(it)^m, approximating
// exp((s/2-1/4) log(t/2pi) - it/2 - i pi/8 - i theta(s)) for t > 0.
template <typename Real>
Complex<Real> exp_theta_prefactor_series(const Complex<Real>& s, int n_terms);

// The left side of the series above, computed from theta_exact.
template <typename Real>
Complex<Real> exp_theta_prefactor(const Complex<Real>& s);

} // namespace rsg
