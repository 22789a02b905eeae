#include "rsg/rsformula/rsformula.hpp"

#include "rsg/coeffs/coeffs.hpp"
#include "rsg/mordell/mordell.hpp"
#include "rsg/numkernel/gamma.hpp"
#include "rsg/polyalg/special.hpp"

namespace rsg {

namespace {

template <typename Real>
Real guard_band(const Real& x) {
    using std::abs;
    using std::pow;
    return pow(Real(10), 4 - decimal_digits<Real>()) * std::max(Real(1), abs(x));
}

// floor(x), except that x within the guard band below an integer counts as that integer.
template <typename Real>
long long floor_guarded(const Real& x) {
    using std::floor;
    long long f = static_cast<long long>(floor(x));
    if (Real(f + 1) - x <= guard_band(x))
        ++f;
    return f;
}

// Neumaier-compensated accumulation of one real component.
template <typename Real>
struct CompensatedSum {
    Real sum{0};
    Real carry{0};
    void add(const Real& x) {
        using std::abs;
        Real t = sum + x;
        if (abs(sum) >= abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    Real value() const { return sum + carry; }
};

template <typename Real>
Complex<Real> partial_sum_count(const Complex<Real>& z, long long count) {
    using std::log;
    CompensatedSum<Real> re, im;
    for (long long n = 1; n <= count; ++n) {
        Complex<Real> term = exp(-z * log(Real(n)));
        re.add(term.re);
        im.add(term.im);
    }
    return Complex<Real>(re.value(), im.value());
}

template <typename Real>
void require_point(const Real& alpha, const Real& beta, const Real& t) {
    if (!(t > 0))
        throw DomainError("evaluation point needs t > 0");
    if (!(alpha >= 1) || !(beta >= 1))
        throw DomainError("partial-sum lengths alpha and beta must be at least 1");
}

template <typename Real>
std::vector<Real> pascal_row(int k) {
    std::vector<Real> row(k + 1, Real(1));
    for (int j = 1; j < k; ++j)
        row[j] = row[j - 1] * Real(k - j + 1) / Real(j);
    return row;
}

} // namespace

template <typename Real>
Real EvalPoint<Real>::lambda() const {
    using std::sqrt;
    return sqrt(alpha / beta);
}

template <typename Real>
EvalPoint<Real> EvalPoint<Real>::from_alpha(const Complex<Real>& s, const Real& alpha) {
    EvalPoint p{s, alpha, s.im / (2 * pi_of<Real>() * alpha)};
    require_point(p.alpha, p.beta, s.im);
    return p;
}

template <typename Real>
EvalPoint<Real> EvalPoint<Real>::from_lambda(const Complex<Real>& s, const Real& lambda) {
    using std::sqrt;
    if (!(lambda > 0))
        throw DomainError("lambda must be positive");
    if (!(s.im > 0))
        throw DomainError("evaluation point needs t > 0");
    Real root = sqrt(s.im / (2 * pi_of<Real>()));
    EvalPoint p{s, lambda * root, root / lambda};
    require_point(p.alpha, p.beta, s.im);
    return p;
}

template <typename Real>
EvalPoint<Real> EvalPoint<Real>::from_alpha_beta(const Complex<Real>& s, const Real& alpha, const Real& beta) {
    using std::abs;
    using std::pow;
    require_point(alpha, beta, s.im);
    Real mismatch = abs(s.im - 2 * pi_of<Real>() * alpha * beta);
    if (mismatch > pow(Real(10), 2 - decimal_digits<Real>()) * s.im)
        throw DomainError("t differs from 2 pi alpha beta");
    return EvalPoint{s, alpha, beta};
}

template <typename Real>
FracParts<Real> frac_parts(const EvalPoint<Real>& pt) {
    FracParts<Real> f;
    f.floor_alpha = floor_guarded(pt.alpha);
    f.floor_beta = floor_guarded(pt.beta);
    f.a = std::max(Real(0), pt.alpha - Real(f.floor_alpha));
    f.b = std::max(Real(0), pt.beta - Real(f.floor_beta));
    return f;
}

template <typename Real>
Complex<Real> partial_sum(const Complex<Real>& z, const Real& bound) {
    if (bound < 1)
        return Complex<Real>();
    return partial_sum_count(z, floor_guarded(bound));
}

template <typename Real>
Complex<Real> zeta_reference(const Complex<Real>& s) {
    using std::abs;
    using std::ceil;
    using std::log;
    if (s.im == 0 && s.re == 1)
        throw DomainError("zeta has a pole at s = 1");
    const long long n = std::max<long long>(static_cast<long long>(ceil(abs(s.im) / 2)), decimal_digits<Real>() + 10);
    const Complex<Real> one(Real(1));
    Complex<Real> sum = partial_sum_count(s, n - 1);
    const Real log_n = log(Real(n));
    const Complex<Real> n_pow = exp(-s * log_n);  // N^{-s}
    sum += n_pow * Real(n) / (s - one) + n_pow / Real(2);

    // sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    const Real eps = epsilon_of<Real>();
    Complex<Real> rising = s;               // s(s+1)...(s+2k-2)
    Complex<Real> power = n_pow / Real(n);  // N^{-s-2k+1}
    Real inv_fact = Real(1) / Real(2);      // 1/(2k)!
    const Real inv_n2 = Real(1) / (Real(n) * Real(n));
    for (int k = 1; k <= 400; ++k) {
        Complex<Real> term = rising * power * (from_rational<Real>(bernoulli_number(2 * k)) * inv_fact);
        sum += term;
        if (abs(term) <= eps * abs(sum))
            return sum;
        rising *= (s + Real(2 * k - 1)) * (s + Real(2 * k));
        power *= inv_n2;
        inv_fact /= Real(2 * k + 1) * Real(2 * k + 2);
    }
    throw ConvergenceError("Euler-Maclaurin tail did not converge");
}

template <typename Real>
Complex<Real> remainder_exact(const EvalPoint<Real>& pt) {
    const Complex<Real> s = pt.s;
    const Complex<Real> one(Real(1));
    const Complex<Real> i = Complex<Real>::i();
    Complex<Real> first = zeta_reference(s) - partial_sum(s, pt.alpha);
    Complex<Real> second = partial_sum(one - s, pt.beta);
    return exp(i * theta_exact(s)) * first - exp(i * theta_exact(one - s)) * second;
}

template <typename Real>
Complex<Real> ExpansionResult<Real>::value(int n_terms) const {
    using std::sqrt;
    if (n_terms < 0 || n_terms > static_cast<int>(order_terms.size()))
        throw DomainError("requested more expansion terms than were computed");
    Complex<Real> sum;
    Real scale = 1;
    const Real step = 1 / sqrt(t);
    for (int n = 0; n < n_terms; ++n) {
        sum += order_terms[n] * scale;
        scale *= step;
    }
    return prefactor * sum;
}

template <typename Real>
ExpansionResult<Real> rs_general(const EvalPoint<Real>& pt, int n_terms, const QuadratureSpec<Real>& spec) {
    using std::log;
    using std::pow;
    using std::sqrt;
    if (n_terms < 0)
        throw DomainError("number of expansion terms must be nonnegative");
    const Real pi = pi_of<Real>();
    const Real t = pt.t();
    const Real lambda = pt.lambda();
    const FracParts<Real> fp = frac_parts(pt);
    const Real& a = fp.a;
    const Real& b = fp.b;

    ExpansionResult<Real> r;
    r.t = t;
    r.sign = ((fp.floor_alpha * fp.floor_beta) % 2 == 0) ? -1 : 1;
    Real phase_arg = pi * (2 * a * pt.beta - 2 * b * pt.alpha + a * a / (lambda * lambda) - b * b * lambda * lambda) / 2;
    r.phase = polar(Real(1), phase_arg);
    Complex<Real> lambda_pow = exp((Complex<Real>(Real(0.5)) - pt.s) * log(lambda));
    r.prefactor = r.phase * lambda_pow * (Real(r.sign) * pow(2 * pi / t, Real(0.25)));
    r.g_argument = Complex<Real>(a / lambda + b * lambda);
    r.tau = Complex<Real>(lambda * lambda);
    r.p_argument = sqrt(pi / 2) * (a / lambda - b * lambda);
    Real sixth = pow(t, Real(1) / Real(6));
    r.regime_warning = lambda >= sixth || 1 / lambda >= sixth;
    if (n_terms == 0)
        return r;

    const int rmax = 3 * (n_terms - 1);
    r.g_derivatives = g_derivatives(r.g_argument, r.tau, rmax, spec);
    const Complex<Real> x(r.p_argument);
    const Real root_two_pi = sqrt(2 * pi);
    for (int n = 0; n < n_terms; ++n) {
        Complex<Real> bracket;
        Real scale = 1;
        for (int k = 0; k <= 3 * n; ++k) {
            // r = k: G^{(r)}/(2pi)^{r/2} P_{n,3n-r}
            bracket += r.g_derivatives[k] * p_poly(n, 3 * n - k).eval(x, pt.sigma()) * scale;
            scale /= root_two_pi;
        }
        r.order_terms.push_back(bracket);
    }
    return r;
}

template <typename Real>
IntermediateResult<Real> rs_intermediate(const EvalPoint<Real>& pt, int n_terms, const QuadratureSpec<Real>& spec) {
    using std::log;
    using std::pow;
    using std::sqrt;
    if (n_terms < 1)
        throw DomainError("intermediate expansion needs N >= 1");
    using C = Complex<Real>;
    const Real pi = pi_of<Real>();
    const Real t = pt.t();
    const Real lambda = pt.lambda();
    const FracParts<Real> fp = frac_parts(pt);
    const C s = pt.s;
    const C i = C::i();

    IntermediateResult<Real> r;
    const Real root_half_pi = sqrt(pi / 2);
    r.omega = eighth_root_power<Real>(-2) * (root_half_pi * (fp.a / lambda - fp.b * lambda));
    auto g = g_derivatives(C(fp.a / lambda + fp.b * lambda), C(lambda * lambda), n_terms - 1, spec);

    // H_j(omega), j < N
    std::vector<C> h(n_terms);
    h[0] = C(Real(1));
    if (n_terms > 1)
        h[1] = r.omega * Real(2);
    for (int j = 1; j + 1 < n_terms; ++j)
        h[j + 1] = r.omega * h[j] * Real(2) - h[j - 1] * Real(2 * j);

    const Real root_two_pi = sqrt(2 * pi);
    C sum;
    for (int k = 0; k < n_terms; ++k) {
        auto binom = pascal_row<Real>(k);
        C ck;
        for (int rr = 0; rr <= k; ++rr) {
            C term = g[rr] * eighth_root_power<Real>(2 * (k - 3 * rr)) * h[k - rr] * binom[rr];
            term /= pow(Real(2), k - rr) * pow(root_two_pi, rr);
            ck += term;
        }
        r.c.push_back(ck);
        r.a.push_back(a_eval(s, k));
        sum += r.a.back() * ck;
    }

    // (2pi)^s e^{pi i s/2} / (Gamma(s) (e^{2 pi i s} - 1)), in log space.
    C log_q = s * log(2 * pi) + i * s * (pi / 2) - log_gamma(s);
    C q = exp(log_q) / (exp(i * s * (2 * pi)) - Real(1));
    Real phase_arg = pi * (2 * fp.a * pt.beta - 2 * fp.b * pt.alpha + fp.a * fp.a / (lambda * lambda) -
                           fp.b * fp.b * lambda * lambda) / 2;
    C lambda_pow = exp((C(Real(0.5)) - s) * log(lambda));
    C expo = exp((s / Real(2) - Real(0.25)) * log(t / (2 * pi)) - i * (t / 2 + pi / 8));
    Real sign = ((fp.floor_alpha * fp.floor_beta) % 2 == 0) ? Real(1) : Real(-1);
    r.scale = q * pow(2 * pi / t, Real(0.25)) * lambda_pow * polar(Real(1), phase_arg) * expo * sign;
    r.correction = r.scale * sum;
    r.remainder = exp(i * theta_exact(s)) * r.correction;
    return r;
}

template <typename Real>
std::vector<Real> c_classical(const Real& a, int count, bool closed_form_psi, const QuadratureSpec<Real>& spec) {
    using std::sqrt;
    if (count < 0)
        throw DomainError("count must be nonnegative");
    std::vector<Real> out;
    if (count == 0)
        return out;
    const int rmax = 3 * (count - 1);
    const Complex<Real> u(2 * a);
    std::vector<Complex<Real>> g =
        closed_form_psi ? psi_classical(u, rmax) : g_derivatives(u, Complex<Real>(Real(1)), rmax, spec);
    const Real root_two_pi = sqrt(2 * pi_of<Real>());
    for (int m = 0; m < count; ++m) {
        Complex<Real> acc;
        Real scale = 1;
        for (int r = 0; r <= 3 * m; ++r) {
            GaussRational p0 = p_poly(m, 3 * m - r).at_sigma(BigRational(1) / 2).coeff(0);
            if (!p0.is_zero())
                acc += g[r] * p0.template to_complex<Real>() * scale;
            scale /= root_two_pi;
        }
        out.push_back(acc.re);
    }
    return out;
}

template <typename Real>
Real hardy_z(const Real& t, int n_terms, const QuadratureSpec<Real>& spec) {
    using std::cos;
    using std::log;
    using std::pow;
    using std::sqrt;
    if (!(t > 0))
        throw DomainError("hardy_z needs t > 0");
    if (n_terms < 0)
        throw DomainError("number of terms must be nonnegative");
    const Real pi = pi_of<Real>();
    const Real alpha = sqrt(t / (2 * pi));
    const long long fl = floor_guarded(alpha);
    const Real a = std::max(Real(0), alpha - Real(fl));
    const Real th = theta_exact(Complex<Real>(Real(0.5), t)).re;
    CompensatedSum<Real> main;
    for (long long n = 1; n <= fl; ++n)
        main.add(2 * cos(th - t * log(Real(n))) / sqrt(Real(n)));
    Real z = main.value();
    if (n_terms == 0)
        return z;
    std::vector<Real> c = c_classical(a, n_terms, false, spec);
    Real corr = 0, scale = 1;
    for (int m = 0; m < n_terms; ++m) {
        corr += c[m] * scale;
        scale /= sqrt(t);
    }
    Real sign = (fl % 2 == 0) ? Real(-1) : Real(1);
    return z + sign * pow(2 * pi / t, Real(0.25)) * corr;
}

template <typename Real>
Real hardy_z_exact(const Real& t) {
    Complex<Real> s(Real(0.5), t);
    return (exp(Complex<Real>::i() * theta_exact(s)) * zeta_reference(s)).re;
}

template <typename Real>
Real hl_afe_residual(const EvalPoint<Real>& pt) {
    using std::pow;
    using std::sqrt;
    const Real lambda = pt.lambda();
    Real denom = pow(lambda, Real(0.5) - pt.sigma()) * (sqrt(lambda) + 1 / sqrt(lambda));
    return abs(remainder_exact(pt)) * pow(pt.t(), Real(0.25)) / denom;
}

#define RSG_INSTANTIATE(R)                                                                                             \
    template struct EvalPoint<R>;                                                                                      \
    template struct ExpansionResult<R>;                                                                                \
    template FracParts<R> frac_parts(const EvalPoint<R>&);                                                             \
    template Complex<R> partial_sum(const Complex<R>&, const R&);                                                      \
    template Complex<R> zeta_reference(const Complex<R>&);                                                             \
    template Complex<R> remainder_exact(const EvalPoint<R>&);                                                          \
    template ExpansionResult<R> rs_general(const EvalPoint<R>&, int, const QuadratureSpec<R>&);                        \
    template IntermediateResult<R> rs_intermediate(const EvalPoint<R>&, int, const QuadratureSpec<R>&);                \
    template std::vector<R> c_classical(const R&, int, bool, const QuadratureSpec<R>&);                                \
    template R hardy_z(const R&, int, const QuadratureSpec<R>&);                                                       \
    template R hardy_z_exact(const R&);                                                                                \
    template R hl_afe_residual(const EvalPoint<R>&);

RSG_INSTANTIATE(double)
RSG_INSTANTIATE(WideReal)

} // namespace rsg
