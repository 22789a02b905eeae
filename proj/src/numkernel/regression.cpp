#include "rsg/numkernel/regression.hpp"

#include "rsg/numkernel/precision.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace rsg {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("line fit needs two or more points");
    const Eigen::Index n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design(i, 0) = x[i];
        design(i, 1) = 1.0;
        rhs(i) = y[i];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < 2)
        throw DomainError("line fit needs two distinct abscissae");
    Eigen::Vector2d sol = qr.solve(rhs);
    return {sol(0), sol(1)};
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0))
            throw DomainError("log-log fit needs positive data");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    return fit_line(lx, ly).slope;
}

} // namespace rsg
