#include "rsg/mordell/mordell.hpp"

#include "rsg/mordell/series.hpp"

#include <cmath>

namespace rsg {

namespace {

template <typename Real>
void require_tau(const Complex<Real>& tau) {
    if (!(tau.re > 0))
        throw DomainError("Mordell integral needs Re(tau) > 0");
}

// H_0(z), ..., H_kmax(z).
template <typename Real>
std::vector<Complex<Real>> hermite_values(const Complex<Real>& z, int kmax) {
    std::vector<Complex<Real>> h(kmax + 1);
    h[0] = Complex<Real>(Real(1));
    if (kmax >= 1)
        h[1] = z * Real(2);
    for (int k = 1; k < kmax; ++k)
        h[k + 1] = z * h[k] * Real(2) - h[k - 1] * Real(2 * k);
    return h;
}

template <typename Real>
std::vector<Real> pascal_row(int k) {
    std::vector<Real> row(k + 1, Real(1));
    for (int j = 1; j < k; ++j)
        row[j] = row[j - 1] * Real(k - j + 1) / Real(j);
    return row;
}

// 1 / (e^w + 1) without overflow.
template <typename Real>
Complex<Real> logistic(const Complex<Real>& w) {
    if (w.re > 0) {
        Complex<Real> e = exp(-w);
        return e / (e + Real(1));
    }
    return Complex<Real>(Real(1)) / (exp(w) + Real(1));
}

template <typename Real>
Complex<Real> eps_dir() {
    using std::sqrt;
    Real r = sqrt(Real(2)) / 2;
    return Complex<Real>(-r, r);
}

// d^k/dw^k exp(pi i w^2 / tau), k = 0..kmax.
template <typename Real>
std::vector<Complex<Real>> gaussian_derivatives(const Complex<Real>& w, const Complex<Real>& tau, int kmax) {
    const Real pi = pi_of<Real>();
    Complex<Real> c = eighth_root_power<Real>(-2) * sqrt(Complex<Real>(pi) / tau);
    Complex<Real> phi = exp(Complex<Real>::i() * pi * w * w / tau);
    std::vector<Complex<Real>> h = hermite_values(c * w, kmax);
    std::vector<Complex<Real>> out(kmax + 1);
    Complex<Real> mc = -c, power(Real(1));
    for (int k = 0; k <= kmax; ++k) {
        out[k] = power * h[k] * phi;
        power *= mc;
    }
    return out;
}

template <typename Real>
void step_unit(std::vector<Complex<Real>>& y, Complex<Real>& w, const Complex<Real>& tau, int dir) {
    // Upsilon(w+1) = Upsilon(w) + tau^{-1/2} e^{3 pi i/4} phi(w)
    const int kmax = static_cast<int>(y.size()) - 1;
    Complex<Real> scale = eighth_root_power<Real>(6) / sqrt(tau);
    if (dir > 0) {
        auto d = gaussian_derivatives(w, tau, kmax);
        for (int k = 0; k <= kmax; ++k)
            y[k] += scale * d[k];
        w += Real(1);
    } else {
        w -= Real(1);
        auto d = gaussian_derivatives(w, tau, kmax);
        for (int k = 0; k <= kmax; ++k)
            y[k] -= scale * d[k];
    }
}

template <typename Real>
void step_tau(std::vector<Complex<Real>>& y, Complex<Real>& w, const Complex<Real>& tau, int dir) {
    const int kmax = static_cast<int>(y.size()) - 1;
    const Real pi = pi_of<Real>();
    const Complex<Real> two_pi_i(Real(0), 2 * pi * Real(dir));
    std::vector<Complex<Real>> out(kmax + 1);
    if (dir > 0) {
        // Upsilon(w+tau) = e^{pi i (tau + 2w)} (Upsilon(w) - 1)
        Complex<Real> e = exp(Complex<Real>::i() * pi * (tau + w * Real(2)));
        std::vector<Complex<Real>> base = y;
        base[0] -= Real(1);
        for (int k = 0; k <= kmax; ++k) {
            auto binom = pascal_row<Real>(k);
            Complex<Real> acc, power(Real(1));
            for (int j = 0; j <= k; ++j) {
                acc += power * base[k - j] * binom[j];
                power *= two_pi_i;
            }
            out[k] = acc * e;
        }
        w += tau;
    } else {
        // Upsilon(w-tau) = 1 + e^{-pi i (2w - tau)} Upsilon(w)
        Complex<Real> f = exp(-Complex<Real>::i() * pi * (w * Real(2) - tau));
        for (int k = 0; k <= kmax; ++k) {
            auto binom = pascal_row<Real>(k);
            Complex<Real> acc, power(Real(1));
            for (int j = 0; j <= k; ++j) {
                acc += power * y[k - j] * binom[j];
                power *= two_pi_i;
            }
            out[k] = acc * f;
        }
        out[0] += Real(1);
        w -= tau;
    }
    y = std::move(out);
}

} // namespace

template <typename Real>
std::vector<Complex<Real>> upsilon_derivatives(const Complex<Real>& u, const Complex<Real>& tau, int kmax,
                                               const QuadratureSpec<Real>& spec) {
    require_tau(tau);
    if (kmax < 0)
        throw DomainError("derivative order must be nonnegative");
    using C = Complex<Real>;
    const Real pi = pi_of<Real>();
    const C eps = eps_dir<Real>();
    const C i = C::i();
    const C linear = i * pi * eps * (u * Real(2) - tau);
    const C two_pi_i_eps = i * (2 * pi) * eps;
    const C minus_pi_tau = tau * (-pi);
    const C two_eps = eps * Real(2);

    auto integrand = [&](const Real& t) {
        std::vector<C> v(kmax + 1);
        C base = exp(minus_pi_tau * (t * t) + linear * t) * logistic(two_pi_i_eps * t);
        C factor = two_eps * t + Real(1);
        v[0] = base;
        for (int k = 1; k <= kmax; ++k)
            v[k] = v[k - 1] * factor;
        return v;
    };
    auto result = integrate_real_line_multi<Real>(integrand, kmax + 1, spec);

    C pre = -eps * exp(i * pi * (u - tau / Real(4)));
    C pi_i(Real(0), pi);
    std::vector<C> out(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        out[k] = pre * result.values[k];
        pre *= pi_i;
    }
    return out;
}

template <typename Real>
Complex<Real> upsilon(const Complex<Real>& u, const Complex<Real>& tau, int k, const QuadratureSpec<Real>& spec) {
    return upsilon_derivatives(u, tau, k, spec)[k];
}

template <typename Real>
std::vector<Complex<Real>> upsilon_reduced(const Complex<Real>& u, const Complex<Real>& tau, int kmax, long long m,
                                           long long n, const QuadratureSpec<Real>& spec) {
    require_tau(tau);
    Complex<Real> w = u - Real(m) - tau * Real(n);
    std::vector<Complex<Real>> y = upsilon_derivatives(w, tau, kmax, spec);
    for (long long j = 0; j < std::abs(m); ++j)
        step_unit(y, w, tau, m > 0 ? 1 : -1);
    for (long long j = 0; j < std::abs(n); ++j)
        step_tau(y, w, tau, n > 0 ? 1 : -1);
    return y;
}

template <typename Real>
std::pair<long long, long long> upsilon_reduction(const Complex<Real>& u, const Complex<Real>& tau) {
    using std::round;
    require_tau(tau);
    Complex<Real> d = u - tau / Real(2);
    long long n;
    if (tau.im != 0)
        n = static_cast<long long>(round(d.im / tau.im));
    else
        n = static_cast<long long>(round(d.re / tau.re));
    Complex<Real> r = d - tau * Real(n);
    long long m = static_cast<long long>(round(r.re));
    return {m, n};
}

template <typename Real>
std::vector<Complex<Real>> upsilon_auto(const Complex<Real>& u, const Complex<Real>& tau, int kmax,
                                        const QuadratureSpec<Real>& spec) {
    auto [m, n] = upsilon_reduction(u, tau);
    return upsilon_reduced(u, tau, kmax, m, n, spec);
}

template <typename Real>
std::vector<Complex<Real>> g_derivatives(const Complex<Real>& u, const Complex<Real>& tau, int kmax,
                                         const QuadratureSpec<Real>& spec) {
    using C = Complex<Real>;
    using std::sqrt;
    require_tau(tau);
    const Real pi = pi_of<Real>();
    const C root_tau = sqrt(tau);
    const C quarter_tau = sqrt(root_tau);
    std::vector<C> y = upsilon_auto(root_tau * u, tau, kmax, spec);

    // d^j/du^j exp(-pi i u^2/2) = (-c)^j H_j(c u) exp(-pi i u^2/2), c = e^{pi i/4} sqrt(pi/2).
    const Real root_half_pi = sqrt(pi / 2);
    const C c = eighth_root_power<Real>(2) * root_half_pi;
    std::vector<C> h = hermite_values(c * u, kmax);
    std::vector<C> gauss(kmax + 1), tau_pow(kmax + 1);
    C mc = -c, power(Real(1));
    for (int j = 0; j <= kmax; ++j) {
        gauss[j] = power * h[j];
        power *= mc;
    }
    tau_pow[0] = C(Real(1));
    for (int j = 1; j <= kmax; ++j)
        tau_pow[j] = tau_pow[j - 1] * root_tau;

    C pre = quarter_tau * exp(C(Real(0), -pi / 2) * u * u + C(Real(0), pi / 8));
    std::vector<C> out(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        auto binom = pascal_row<Real>(k);
        C acc;
        for (int j = 0; j <= k; ++j)
            acc += gauss[j] * tau_pow[k - j] * y[k - j] * binom[j];
        out[k] = pre * acc;
    }
    return out;
}

template <typename Real>
Complex<Real> g_value(const Complex<Real>& u, const Complex<Real>& tau, int k, const QuadratureSpec<Real>& spec) {
    return g_derivatives(u, tau, k, spec)[k];
}

template <typename Real>
Complex<Real> theta_k(const Complex<Real>& u, long long k) {
    using std::sqrt;
    return u * u / Real(2) - u * sqrt(Real(k)) - Real(k) / Real(2) - Real(1) / Real(8);
}

template <typename Real>
RationalG<Real> g_rational(const Complex<Real>& u, long long m, long long n, int kmax,
                           const QuadratureSpec<Real>& spec, double singular_guard) {
    using C = Complex<Real>;
    using S = TaylorSeries<Real>;
    using std::sqrt;
    if (m <= 0 || n <= 0)
        throw DomainError("g_rational needs positive m and n");
    const Real pi = pi_of<Real>();
    const Real mn = Real(m * n);
    const Real root_mn = sqrt(mn);
    const C arg0 = (u * root_mn + mn / 2) * pi;
    if (abs(sin(arg0)) < Real(singular_guard)) {
        RationalG<Real> r;
        r.derivatives = g_derivatives(u, C(Real(m) / Real(n)), kmax, spec);
        r.closed_form = false;
        return r;
    }
    const C i = C::i();
    const Real ratio = Real(m) / Real(n);
    const Real root_ratio = sqrt(ratio);
    const Real inv_root_ratio = sqrt(Real(n) / Real(m));
    const C half_pi_i = i * (pi / 2);
    const C const_part = i * pi * (mn / 2 + Real(1) / Real(8));

    S first(kmax);
    for (long long j = 0; j < n; ++j) {
        C b = i * pi * root_mn - i * (2 * pi * Real(j)) * root_ratio;
        C c = const_part - i * pi * (Real(j * j) * ratio);
        first += exp(S::quadratic_at(kmax, -half_pi_i, b, c, u));
    }
    S second(kmax);
    for (long long j = 0; j < m; ++j) {
        C b = -i * pi * root_mn + i * (2 * pi * Real(j)) * inv_root_ratio;
        C c = -const_part + i * pi * (Real(j * j) / ratio);
        second += exp(S::quadratic_at(kmax, half_pi_i, b, c, u));
    }
    const Real quarter = sqrt(root_ratio);
    S numerator = first * C(quarter) - second * C(Real(1) / quarter);
    S den = sin(S::quadratic_at(kmax, C(), C(pi * root_mn), C(pi * mn / 2), u)) * C(Real(0), Real(2));
    S g = numerator / den;

    RationalG<Real> r;
    r.derivatives.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        r.derivatives[k] = g.derivative(k);
    return r;
}

template <typename Real>
std::vector<Complex<Real>> psi_classical(const Complex<Real>& u, int kmax) {
    using C = Complex<Real>;
    using S = TaylorSeries<Real>;
    using std::floor;
    if (kmax < 0)
        throw DomainError("derivative order must be nonnegative");
    const Real pi = pi_of<Real>();
    const long long j = static_cast<long long>(floor(u.re));
    const C h(Real(j) + Real(0.5));
    const C delta = u - h;

    if (abs(delta) > Real(0.05)) {
        S num = cos(S::quadratic_at(kmax, C(pi / 2), C(-pi), C(-pi / 8), u));
        S den = cos(S::quadratic_at(kmax, C(), C(pi), C(), u));
        S psi = num / den;
        std::vector<C> out(kmax + 1);
        for (int k = 0; k <= kmax; ++k)
            out[k] = psi.derivative(k);
        return out;
    }

    // About h = j + 1/2 the numerator is (-1)^J sin(q(h+e) - q(h)), J = j(j-1)/2,
    // and the denominator is -(-1)^j sin(pi e); both vanish at e = 0.
    const int order = kmax + 20 + decimal_digits<Real>();
    S delta_q(order + 1);
    delta_q[1] = C(pi * (Real(j) - Real(0.5)));
    delta_q[2] = C(pi / 2);
    S pi_e(order + 1);
    pi_e[1] = C(pi);
    const long long big_j = j * (j - 1) / 2;
    const Real sign_num = (big_j % 2 == 0) ? Real(1) : Real(-1);
    const Real sign_den = (j % 2 == 0) ? Real(-1) : Real(1);
    S num = sin(delta_q) * C(sign_num);
    S den = sin(pi_e) * C(sign_den);
    S psi = num.shifted_down() / den.shifted_down();
    return psi.derivatives_at(delta, kmax);
}

#define RSG_INSTANTIATE(R)                                                                                             \
    template std::vector<Complex<R>> upsilon_derivatives(const Complex<R>&, const Complex<R>&, int,                    \
                                                         const QuadratureSpec<R>&);                                    \
    template Complex<R> upsilon(const Complex<R>&, const Complex<R>&, int, const QuadratureSpec<R>&);                  \
    template std::vector<Complex<R>> upsilon_reduced(const Complex<R>&, const Complex<R>&, int, long long, long long, \
                                                     const QuadratureSpec<R>&);                                        \
    template std::pair<long long, long long> upsilon_reduction(const Complex<R>&, const Complex<R>&);                  \
    template std::vector<Complex<R>> upsilon_auto(const Complex<R>&, const Complex<R>&, int, const QuadratureSpec<R>&); \
    template std::vector<Complex<R>> g_derivatives(const Complex<R>&, const Complex<R>&, int,                          \
                                                   const QuadratureSpec<R>&);                                          \
    template Complex<R> g_value(const Complex<R>&, const Complex<R>&, int, const QuadratureSpec<R>&);                  \
    template Complex<R> theta_k(const Complex<R>&, long long);                                                         \
    template RationalG<R> g_rational(const Complex<R>&, long long, long long, int, const QuadratureSpec<R>&, double);  \
    template std::vector<Complex<R>> psi_classical(const Complex<R>&, int);

RSG_INSTANTIATE(double)
RSG_INSTANTIATE(WideReal)

} // namespace rsg
