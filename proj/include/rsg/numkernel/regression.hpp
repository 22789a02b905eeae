#pragma once

#include <vector>

namespace rsg {

struct LineFit {
    double slope = 0;
    double intercept = 0;
};

// Least-squares line y = slope x + intercept. Needs two or more distinct x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Slope of log y against log x.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace rsg
