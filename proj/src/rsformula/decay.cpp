#include "rsg/rsformula/decay.hpp"

#include "rsg/numkernel/gamma.hpp"
#include "rsg/numkernel/regression.hpp"

#include <cmath>

namespace rsg {

namespace {

void fit(DecayStudy& d) {
    std::vector<double> e;
    for (const auto& x : d.error)
        e.push_back(to_double(x));
    d.slope = log_log_slope(d.t, e);
}

} // namespace

EvalPoint<WideReal> snapped_point(const WideReal& sigma, double t_nominal, const WideReal& lambda,
                                  const WideReal& frac_beta) {
    using W = WideReal;
    const W two_pi = 2 * pi_of<W>();
    W beta_nominal = sqrt(W(t_nominal) / two_pi) / lambda;
    W j = floor(beta_nominal - frac_beta + W(0.5));
    if (j < 1)
        j = 1;
    W beta = j + frac_beta;
    W alpha = lambda * lambda * beta;
    return EvalPoint<W>{Complex<W>(sigma, two_pi * alpha * beta), alpha, beta};
}

DecayStudy afe_decay(const WideReal& lambda, const std::vector<double>& t_grid, const WideReal& frac_beta) {
    DecayStudy d;
    for (double t : t_grid) {
        auto pt = snapped_point(WideReal(0.5), t, lambda, frac_beta);
        d.t.push_back(to_double(pt.t()));
        d.error.push_back(abs(remainder_exact(pt)));
    }
    fit(d);
    return d;
}

DecayStudy order_decay(const WideReal& sigma, const WideReal& lambda, int n_terms, const std::vector<double>& t_grid,
                       const WideReal& frac_beta, const QuadratureSpec<WideReal>& spec) {
    DecayStudy d;
    for (double t : t_grid) {
        auto pt = snapped_point(sigma, t, lambda, frac_beta);
        d.t.push_back(to_double(pt.t()));
        d.error.push_back(abs(rs_general(pt, n_terms, spec).value() - remainder_exact(pt)));
    }
    fit(d);
    return d;
}

DecayStudy theta_decay(const WideReal& sigma, int n_terms, const std::vector<double>& t_grid) {
    DecayStudy d;
    for (double t : t_grid) {
        Complex<WideReal> s(sigma, WideReal(t));
        d.t.push_back(t);
        d.error.push_back(abs(theta_asymptotic(s, n_terms) - theta_exact(s)));
    }
    fit(d);
    return d;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    if (count < 2 || !(lo > 0) || !(hi > lo))
        throw DomainError("log grid needs 0 < lo < hi and two or more points");
    std::vector<double> g;
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i)
        g.push_back(lo * std::exp(step * i));
    return g;
}

} // namespace rsg
