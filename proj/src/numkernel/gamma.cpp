#include "rsg/numkernel/gamma.hpp"

#include "rsg/coeffs/coeffs.hpp"
#include "rsg/polyalg/special.hpp"

namespace rsg {

namespace {

template <typename Real>
bool is_nonpositive_integer(const Complex<Real>& z) {
    using std::floor;
    return z.im == 0 && z.re <= 0 && floor(z.re) == z.re;
}

template <typename Real>
Complex<Real> log_i_t(const Real& t) {
    using std::abs;
    using std::log;
    Real half_pi = pi_of<Real>() / 2;
    return Complex<Real>(log(abs(t)), t > 0 ? half_pi : -half_pi);
}

void require(bool ok, const char* what) {
    if (!ok)
        throw DomainError(what);
}

} // namespace

template <typename Real>
Complex<Real> log_gamma(const Complex<Real>& z) {
    using std::ceil;
    using std::log;
    if (is_nonpositive_integer(z))
        throw DomainError("log_gamma at a pole");
    const Real threshold = Real(20 + decimal_digits<Real>() / 2);
    long long shift = 0;
    if (z.re < threshold)
        shift = static_cast<long long>(ceil(threshold - z.re));
    Complex<Real> w = z + Real(shift);

    const Real eps = epsilon_of<Real>();
    const Real half_log_two_pi = log(2 * pi_of<Real>()) / 2;
    Complex<Real> result = (w - Real(0.5)) * log(w) - w + half_log_two_pi;
    const Complex<Real> inv_w = Complex<Real>(Real(1)) / w;
    const Complex<Real> inv_w2 = inv_w * inv_w;
    Complex<Real> power = inv_w;
    for (int n = 1; n <= 400; ++n) {
        Complex<Real> term = power * (from_rational<Real>(bernoulli_number(2 * n)) / Real(2 * n * (2 * n - 1)));
        result += term;
        if (abs(term) <= eps * abs(result))
            break;
        power *= inv_w2;
    }
    for (long long j = 0; j < shift; ++j)
        result -= log(z + Real(j));
    return result;
}

template <typename Real>
Real gamma_real(const Real& x) {
    using std::exp;
    using std::floor;
    using std::sin;
    if (x <= 0 && floor(x) == x)
        throw DomainError("Gamma at a pole");
    if (x > 0)
        return exp(log_gamma(Complex<Real>(x)).re);
    return pi_of<Real>() / (sin(pi_of<Real>() * x) * gamma_real(Real(1 - x)));
}

template <typename Real>
Complex<Real> log_gamma_asymptotic(const Complex<Real>& s, int n_terms) {
    using std::log;
    require(n_terms >= 1, "log_gamma_asymptotic needs N >= 1");
    const Real t = s.im;
    require(t != 0, "log_gamma_asymptotic needs t != 0");
    Complex<Real> result = (s - Real(0.5)) * log_i_t(t) - Complex<Real>(Real(0), t) + log(2 * pi_of<Real>()) / 2;
    const Complex<Real> ratio = Complex<Real>(Real(0), Real(1) / t);
    Complex<Real> power = ratio;
    for (int k = 1; k < n_terms; ++k) {
        result -= power * (eval_real(bernoulli_poly(k + 1), s.re) / Real(k * (k + 1)));
        power *= ratio;
    }
    return result;
}

template <typename Real>
Complex<Real> chi(const Complex<Real>& s) {
    using std::log;
    using std::pow;
    const Real pi = pi_of<Real>();
    if (s.im == 0) {
        Real a = (1 - s.re) / 2, b = s.re / 2;
        using std::floor;
        if ((a <= 0 && floor(a) == a) || (b <= 0 && floor(b) == b))
            throw DomainError("chi at a Gamma singularity");
        return Complex<Real>(pow(pi, s.re - Real(0.5)) * gamma_real(a) / gamma_real(b));
    }
    Complex<Real> e = (s - Real(0.5)) * log(pi) + log_gamma((Real(1) - s) / Real(2)) - log_gamma(s / Real(2));
    return exp(e);
}

template <typename Real>
Complex<Real> theta_exact(const Complex<Real>& s) {
    using std::log;
    if (s.im == 0 && (s.re <= 0 || s.re >= 1))
        throw DomainError("theta_exact is undefined on the real rays (-inf,0] and [1,inf)");
    Complex<Real> e = (s - Real(0.5)) * log(pi_of<Real>()) + log_gamma((Real(1) - s) / Real(2)) - log_gamma(s / Real(2));
    // theta = (i/2) e
    return Complex<Real>(-e.im / 2, e.re / 2);
}

template <typename Real>
Complex<Real> theta_asymptotic(const Complex<Real>& s, int n_terms) {
    using std::abs;
    using std::log;
    require(n_terms >= 1, "theta_asymptotic needs N >= 1");
    const Real t = s.im;
    require(t != 0, "theta_asymptotic needs t != 0");
    const Real pi = pi_of<Real>();
    const Real sgn = t > 0 ? Real(1) : Real(-1);
    Complex<Real> i_theta = (s / Real(2) - Real(0.25)) * log(abs(t) / (2 * pi)) - Complex<Real>(Real(0), t / 2) -
                            Complex<Real>(Real(0), sgn * pi / 8);
    const Complex<Real> ratio(Real(0), Real(2) / t);
    Complex<Real> power = ratio;
    for (int n = 1; n < n_terms; ++n) {
        i_theta -= power * eval_real(f_poly(n), s.re);
        power *= ratio;
    }
    return Complex<Real>(i_theta.im, -i_theta.re);
}

template <typename Real>
Real theta_critical_asymptotic(const Real& t, int n_terms) {
    using std::abs;
    using std::log;
    require(n_terms >= 1, "theta_critical_asymptotic needs N >= 1");
    require(t != 0, "theta_critical_asymptotic needs t != 0");
    const Real pi = pi_of<Real>();
    const Real sgn = t > 0 ? Real(1) : Real(-1);
    Real result = t / 2 * log(abs(t) / (2 * pi)) - t / 2 - sgn * pi / 8;
    Real four_power = 1;
    Real t_power = t;
    for (int n = 1; n < n_terms; ++n) {
        Real b = from_rational<Real>(bernoulli_poly(2 * n)(BigRational(1) / 4));
        result -= four_power * b / (Real((2 * n - 1) * n) * t_power);
        four_power *= -4;
        t_power *= t * t;
    }
    return result;
}

template <typename Real>
Complex<Real> gamma_asymptotic(const Complex<Real>& s, int n_terms) {
    using std::log;
    using std::sqrt;
    require(n_terms >= 1, "gamma_asymptotic needs L >= 1");
    const Real t = s.im;
    require(t > 0, "gamma_asymptotic needs t > 0");
    const Real pi = pi_of<Real>();
    Complex<Real> series;
    Real inv_t_power = 1;
    for (int m = 0; m < n_terms; ++m) {
        series += eval_complex(gamma_poly(m), Complex<Real>(s.re)) * inv_t_power;
        inv_t_power /= t;
    }
    Complex<Real> e = Complex<Real>::i() * s * (pi / 2) - Complex<Real>(Real(0), t) - Complex<Real>(Real(0), pi / 4) +
                      (s - Real(0.5)) * log(t);
    return exp(e) * sqrt(2 * pi) * series;
}

template <typename Real>
Complex<Real> exp_theta_prefactor_series(const Complex<Real>& s, int n_terms) {
    require(n_terms >= 1, "exp_theta_prefactor_series needs L >= 1");
    const Real t = s.im;
    require(t > 0, "exp_theta_prefactor_series needs t > 0");
    const Complex<Real> inv_it = Complex<Real>(Real(1)) / Complex<Real>(Real(0), t);
    Complex<Real> power(Real(1)), sum;
    for (int m = 0; m < n_terms; ++m) {
        sum += power * eval_real(u_poly(m), s.re);
        power *= inv_it;
    }
    return sum;
}

template <typename Real>
Complex<Real> exp_theta_prefactor(const Complex<Real>& s) {
    using std::log;
    const Real t = s.im;
    require(t > 0, "exp_theta_prefactor needs t > 0");
    const Real pi = pi_of<Real>();
    Complex<Real> e = (s / Real(2) - Real(0.25)) * log(t / (2 * pi)) - Complex<Real>(Real(0), t / 2 + pi / 8) -
                      Complex<Real>::i() * theta_exact(s);
    return exp(e);
}

#define RSG_INSTANTIATE(R)                                                                                             \
    template Complex<R> log_gamma(const Complex<R>&);                                                                  \
    template R gamma_real(const R&);                                                                                   \
    template Complex<R> log_gamma_asymptotic(const Complex<R>&, int);                                                  \
    template Complex<R> chi(const Complex<R>&);                                                                        \
    template Complex<R> theta_exact(const Complex<R>&);                                                                \
    template Complex<R> theta_asymptotic(const Complex<R>&, int);                                                      \
    template R theta_critical_asymptotic(const R&, int);                                                               \
    template Complex<R> gamma_asymptotic(const Complex<R>&, int);                                                      \
    template Complex<R> exp_theta_prefactor_series(const Complex<R>&, int);                                            \
    template Complex<R> exp_theta_prefactor(const Complex<R>&);

RSG_INSTANTIATE(double)
RSG_INSTANTIATE(WideReal)

} // namespace rsg
