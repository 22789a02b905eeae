#pragma once

#include "rsg/numkernel/complex.hpp"
#include "rsg/polyalg/poly.hpp"

namespace rsg {

// Exact coefficient families. All results are cached process wide after the
// first computation and are safe to request from several threads.

// f_n(s) = [B_{n+1}(s/2) + (-1)^{n+1} B_{n+1}((1-s)/2)] / (2n(n+1)), n >= 1.
RatPoly f_poly(int n);

// g_n(s) = -B_{n+1}(s) / (n(n+1)), n >= 1.
RatPoly g_poly(int n);

// Coefficients of the series for exp((s/2-1/4) log(t/2pi) - it/2 - i pi/8 - i theta)
// in powers of 1/(it): u_m = (-2)^m sum_k Bhat_{m,k}(f_1, f_2, ...)/k!.
RatPoly u_poly(int m);

// Coefficients of the Stirling series for Gamma in powers of 1/t:
// gamma_m = i^m sum_k Bhat_{m,k}(g_1, g_2, ...)/k!.
GaussPoly gamma_poly(int m);

// d_{m,r}(s) = sum_{n=r}^{m} Bhat_{n,r}(1/3, -1/4, 1/5, ...)/r!
//              * sum_k Bhat_{m-n,k}(1, -1/2, 1/3, ...) (s-1)^k/k!.
RatPoly d_poly(int m, int r);

// q_{n,j}: nonzero only for 0 <= j <= 3n with j = 3n (mod 2).
RatPoly q_poly(int n, int j);

// s_{n,m} = sum_{l=0}^{m} 4^l (3n-2l)!/(m-l)! q_{n,3n-2l}.
RatPoly s_poly(int n, int m);

// P_{n,k}(x, s) for 0 <= k <= 3n, through the Hermite representation.
const BiPoly& p_poly(int n, int k);

// P_{n,k} through the s_{n,m} representation. Not cached.
BiPoly p_poly_via_s(int n, int k);

// a_k(s) as a polynomial in x = t^{-1/2} and sigma, from the d_{m,r} sum.
BiPoly a_poly(int k);

// a_k from the three-term recursion
//   (k+1) sqrt(t) a_{k+1} = -(k+1-s) a_k + i a_{k-2}.
BiPoly a_poly_by_recursion(int k);

// a_k(s) numerically: sum_r i^r d_{k-2r,r}(sigma) t^{r-k/2}.
template <typename Real>
Complex<Real> a_eval(const Complex<Real>& s, int k);

template <typename Real>
Complex<Real> a_eval_by_recursion(const Complex<Real>& s, int k);

} // namespace rsg
