#pragma once

#include "rsg/numkernel/complex.hpp"

#include <algorithm>
#include <vector>

namespace rsg {

template <typename Real>
struct QuadratureSpec {
    Real target_rel_err = Real(0);  // 0 selects 10^-(digits/2 + 5)
    Real initial_step = Real(0.25);
    int max_levels = 14;
    Real max_half_width = Real(400);
};

template <typename Real>
struct QuadratureResult {
    std::vector<Complex<Real>> values;
    int levels = 0;
    long long evaluations = 0;
    Real half_width{0};
    Real last_change{0};
};

template <typename Real>
Real default_quadrature_target() {
    using std::pow;
    return pow(Real(10), -(decimal_digits<Real>() / 2 + 5));
}

// Trapezoidal rule over the real line for integrands that decay at least like
// a Gaussian and are analytic in a strip around the axis. The step is halved
// until two successive estimates differ by at most target_rel_err relative to
// the larger of the estimate and the integral of |f|. `f(t)` returns
// `count` values that share nodes.
template <typename Real, typename F>
QuadratureResult<Real> integrate_real_line_multi(F&& f, std::size_t count, const QuadratureSpec<Real>& spec) {
    using std::abs;
    using std::pow;
    const Real target = spec.target_rel_err > 0 ? spec.target_rel_err : default_quadrature_target<Real>();
    const Real tail = epsilon_of<Real>() / 1000;
    QuadratureResult<Real> out;

    // Half width: step outward in units of the initial step until every
    // component is negligible against its peak for several nodes in a row.
    std::vector<Real> peak(count, Real(0));
    auto track = [&](const std::vector<Complex<Real>>& v) {
        for (std::size_t c = 0; c < count; ++c)
            peak[c] = std::max(peak[c], abs(v[c]));
    };
    auto negligible = [&](const std::vector<Complex<Real>>& v) {
        for (std::size_t c = 0; c < count; ++c)
            if (abs(v[c]) > tail * peak[c])
                return false;
        return true;
    };

    const Real h0 = spec.initial_step;
    std::vector<Complex<Real>> sum(count);
    std::vector<Real> l1(count, Real(0));
    auto accumulate = [&](const std::vector<Complex<Real>>& v) {
        for (std::size_t c = 0; c < count; ++c) {
            sum[c] += v[c];
            l1[c] += abs(v[c]);
        }
        ++out.evaluations;
    };

    {
        auto v0 = f(Real(0));
        track(v0);
        accumulate(v0);
    }
    long long nodes = 0;
    int quiet = 0;
    const long long max_nodes = static_cast<long long>(spec.max_half_width / h0);
    while (quiet < 8) {
        ++nodes;
        if (nodes > max_nodes)
            throw ConvergenceError("integrand does not decay within the allowed half width");
        Real x = h0 * Real(nodes);
        auto vp = f(x), vm = f(-x);
        track(vp);
        track(vm);
        accumulate(vp);
        accumulate(vm);
        quiet = (negligible(vp) && negligible(vm)) ? quiet + 1 : 0;
    }
    const Real half_width = h0 * Real(nodes);
    out.half_width = half_width;

    auto scaled = [&](const Real& h) {
        std::vector<Complex<Real>> est(count);
        for (std::size_t c = 0; c < count; ++c)
            est[c] = sum[c] * h;
        return est;
    };

    Real h = h0;
    std::vector<Complex<Real>> prev = scaled(h);
    for (int level = 1; level <= spec.max_levels; ++level) {
        const long long fine_nodes = nodes << level;
        h = h0 / pow(Real(2), level);
        for (long long j = 1; j <= fine_nodes; j += 2) {
            Real x = h * Real(j);
            accumulate(f(x));
            accumulate(f(-x));
        }
        std::vector<Complex<Real>> est = scaled(h);
        bool converged = level >= 2;
        Real worst = 0;
        for (std::size_t c = 0; c < count; ++c) {
            Real scale = std::max(abs(est[c]), l1[c] * h);
            Real change = abs(est[c] - prev[c]);
            if (scale > 0)
                worst = std::max(worst, change / scale);
            if (change > target * scale)
                converged = false;
        }
        out.last_change = worst;
        prev = std::move(est);
        if (converged) {
            out.values = std::move(prev);
            out.levels = level;
            return out;
        }
    }
    throw ConvergenceError("trapezoidal refinement did not reach the requested accuracy");
}

template <typename Real, typename F>
Complex<Real> integrate_real_line(F&& f, const QuadratureSpec<Real>& spec = {}) {
    auto r = integrate_real_line_multi<Real>([&](const Real& x) { return std::vector<Complex<Real>>{f(x)}; }, 1, spec);
    return r.values[0];
}

} // namespace rsg
