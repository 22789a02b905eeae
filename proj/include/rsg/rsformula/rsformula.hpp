#pragma once

#include "rsg/numkernel/complex.hpp"
#include "rsg/numkernel/quadrature.hpp"

#include <vector>

namespace rsg {

// s = sigma + it together with partial-sum lengths alpha, beta, t = 2 pi alpha beta.
template <typename Real>
struct EvalPoint {
    Complex<Real> s;
    Real alpha{0};
    Real beta{0};

    Real sigma() const { return s.re; }
    Real t() const { return s.im; }
    Real lambda() const;

    static EvalPoint from_alpha(const Complex<Real>& s, const Real& alpha);
    static EvalPoint from_lambda(const Complex<Real>& s, const Real& lambda);
    // Rejects pairs with |t - 2 pi alpha beta| > 10^(2-digits) t.
    static EvalPoint from_alpha_beta(const Complex<Real>& s, const Real& alpha, const Real& beta);
};

template <typename Real>
struct FracParts {
    long long floor_alpha = 0;
    long long floor_beta = 0;
    Real a{0};
    Real b{0};
};

// Integer and fractional parts of alpha and beta. Values within a few ulps
// below an integer are rounded up to it.
template <typename Real>
FracParts<Real> frac_parts(const EvalPoint<Real>& pt);

// sum_{1 <= n <= bound} n^{-z}, compensated.
template <typename Real>
Complex<Real> partial_sum(const Complex<Real>& z, const Real& bound);

// zeta(s) by Euler-Maclaurin summation. Throws DomainError at s = 1.
template <typename Real>
Complex<Real> zeta_reference(const Complex<Real>& s);

// R(s; alpha, beta) = e^{i theta(s)} zeta(s) - e^{i theta(s)} sum_{n<=alpha} n^{-s}
//                     - e^{i theta(1-s)} sum_{n<=beta} n^{s-1}.
template <typename Real>
Complex<Real> remainder_exact(const EvalPoint<Real>& pt);

template <typename Real>
struct ExpansionResult {
    int sign = 1;                 // (-1)^{floor(alpha) floor(beta) + 1}
    Complex<Real> phase;          // exp(pi i (2a beta - 2b alpha + a^2/lambda^2 - b^2 lambda^2)/2)
    Complex<Real> prefactor;      // sign * phase * (2pi/t)^{1/4} * lambda^{1/2-s}
    Complex<Real> g_argument;     // a/lambda + b lambda
    Complex<Real> tau;            // lambda^2
    Real p_argument{0};           // sqrt(pi/2) (a/lambda - b lambda)
    std::vector<Complex<Real>> g_derivatives;  // G^{(r)}(g_argument; tau)
    std::vector<Complex<Real>> order_terms;    // bracket of order n
    Real t{0};
    bool regime_warning = false;  // lambda or 1/lambda >= t^{1/6}

    // prefactor * sum_{n<N} order_terms[n] / t^{n/2}
    Complex<Real> value(int n_terms) const;
    Complex<Real> value() const { return value(static_cast<int>(order_terms.size())); }
};

// The symmetric expansion of R(s; alpha, beta) in powers of t^{-1/2}, N terms.
template <typename Real>
ExpansionResult<Real> rs_general(const EvalPoint<Real>& pt, int n_terms, const QuadratureSpec<Real>& spec = {});

template <typename Real>
struct IntermediateResult {
    std::vector<Complex<Real>> a;        // a_k(s)
    std::vector<Complex<Real>> c;        // c_k(lambda)
    Complex<Real> omega;                 // e^{-pi i/4} sqrt(pi/2) (a/lambda - b lambda)
    Complex<Real> scale;                 // everything multiplying sum_k a_k c_k
    Complex<Real> correction;            // zeta(s) minus both partial sums
    Complex<Real> remainder;             // e^{i theta(s)} * correction
};

// The intermediate expansion: zeta(s) = sum_{n<=alpha} n^{-s} + chi(s) sum_{n<=beta} n^{s-1}
// + scale * sum_{k<N} a_k(s) c_k(lambda).
template <typename Real>
IntermediateResult<Real> rs_intermediate(const EvalPoint<Real>& pt, int n_terms,
                                         const QuadratureSpec<Real>& spec = {});

// C_m(a) = sum_{r=0}^{3m} G^{(r)}(2a; 1)/(2pi)^{r/2} P_{m,3m-r}(0, 1/2), m = 0..count-1.
// G(u; 1) comes from quadrature unless `closed_form_psi` is set.
template <typename Real>
std::vector<Real> c_classical(const Real& a, int count, bool closed_form_psi = false,
                              const QuadratureSpec<Real>& spec = {});

// Hardy's Z(t) from the critical-line formula with N correction terms.
template <typename Real>
Real hardy_z(const Real& t, int n_terms, const QuadratureSpec<Real>& spec = {});

// Z(t) = e^{i theta(1/2+it)} zeta(1/2+it).
template <typename Real>
Real hardy_z_exact(const Real& t);

// |R| t^{1/4} / (lambda^{1/2-sigma} (lambda^{1/2} + lambda^{-1/2})).
template <typename Real>
Real hl_afe_residual(const EvalPoint<Real>& pt);

} // namespace rsg
