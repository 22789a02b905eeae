#include "rsg/polyalg/roots.hpp"

#include <Eigen/Eigenvalues>

#include <complex>

namespace rsg {

template <typename Real>
std::vector<Complex<Real>> polynomial_roots(const GaussPoly& p, int newton_steps) {
    if (p.is_zero())
        throw DomainError("the zero polynomial has no isolated roots");
    std::vector<Complex<Real>> roots;
    int low = 0;
    while (p.coeff(low).is_zero()) {
        roots.emplace_back();
        ++low;
    }
    const int n = p.degree() - low;
    if (n == 0)
        return roots;

    std::vector<GaussRational> c(p.coeffs().begin() + low, p.coeffs().end());
    const GaussRational lead = c.back();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) {
        Complex<double> q = (c[i] / lead).to_complex<double>();
        companion(i, n - 1) = -std::complex<double>(q.re, q.im);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("companion eigenvalues did not converge");

    GaussPoly reduced(c);
    GaussPoly dreduced = reduced.derivative();
    const Real eps = epsilon_of<Real>();
    for (int i = 0; i < n; ++i) {
        std::complex<double> z0 = solver.eigenvalues()[i];
        Complex<Real> z(Real(z0.real()), Real(z0.imag()));
        for (int step = 0; step < newton_steps; ++step) {
            Complex<Real> d = eval_complex<Real>(dreduced, z);
            if (d.re == 0 && d.im == 0)
                break;
            Complex<Real> delta = eval_complex<Real>(reduced, z) / d;
            z -= delta;
            if (abs(delta) <= eps * std::max(Real(1), abs(z)))
                break;
        }
        roots.push_back(z);
    }
    return roots;
}

template std::vector<Complex<double>> polynomial_roots(const GaussPoly&, int);
template std::vector<Complex<WideReal>> polynomial_roots(const GaussPoly&, int);

} // namespace rsg
