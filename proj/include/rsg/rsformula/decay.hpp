#pragma once

#include "rsg/rsformula/rsformula.hpp"

#include <string>
#include <vector>

namespace rsg {

// Error of an approximation as t grows, and the fitted slope of log error
// against log t.
struct DecayStudy {
    std::vector<double> t;
    std::vector<WideReal> error;
    double slope = 0;
};

// The point near t_nominal with beta = j + frac_beta, alpha = lambda^2 beta,
// so b stays fixed along a grid (and a too when lambda^2 is an integer).
EvalPoint<WideReal> snapped_point(const WideReal& sigma, double t_nominal, const WideReal& lambda,
                                  const WideReal& frac_beta);

// |R| at sigma = 1/2: the bare approximate functional equation error.
DecayStudy afe_decay(const WideReal& lambda, const std::vector<double>& t_grid, const WideReal& frac_beta);

// |rs_general(N) - R|.
DecayStudy order_decay(const WideReal& sigma, const WideReal& lambda, int n_terms, const std::vector<double>& t_grid,
                       const WideReal& frac_beta, const QuadratureSpec<WideReal>& spec);

// |theta_asymptotic(N) - theta_exact| at sigma + it.
DecayStudy theta_decay(const WideReal& sigma, int n_terms, const std::vector<double>& t_grid);

// count points log-spaced from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int count);

} // namespace rsg
