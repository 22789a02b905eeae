#pragma once

#include "rsg/numkernel/complex.hpp"

#include <vector>

namespace rsg {

// Truncated Taylor series sum_{j<=order} c_j e^j with complex coefficients.
template <typename Real>
class TaylorSeries {
public:
    using C = Complex<Real>;

    explicit TaylorSeries(int order) : c_(order + 1) {}
    TaylorSeries(int order, const C& constant) : c_(order + 1) { c_[0] = constant; }

    // a e^2 + b e + c expanded about u, i.e. the polynomial a x^2 + b x + c at x = u + e.
    static TaylorSeries quadratic_at(int order, const C& a, const C& b, const C& c, const C& u) {
        TaylorSeries s(order);
        s.c_[0] = (a * u + b) * u + c;
        if (order >= 1)
            s.c_[1] = a * u * Real(2) + b;
        if (order >= 2)
            s.c_[2] = a;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    C& operator[](int j) { return c_[j]; }
    const C& operator[](int j) const { return c_[j]; }

    TaylorSeries& operator+=(const TaylorSeries& o) {
        for (int j = 0; j <= order(); ++j)
            c_[j] += o.c_[j];
        return *this;
    }
    TaylorSeries& operator-=(const TaylorSeries& o) {
        for (int j = 0; j <= order(); ++j)
            c_[j] -= o.c_[j];
        return *this;
    }
    TaylorSeries& operator*=(const C& z) {
        for (auto& a : c_)
            a *= z;
        return *this;
    }
    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
    friend TaylorSeries operator*(TaylorSeries a, const C& z) { return a *= z; }
    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
        TaylorSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    // Requires b[0] != 0.
    friend TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) {
        TaylorSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) {
            C acc = a.c_[n];
            for (int j = 1; j <= n; ++j)
                acc -= b.c_[j] * r.c_[n - j];
            r.c_[n] = acc / b.c_[0];
        }
        return r;
    }

    // Drops the constant term and lowers every power by one.
    TaylorSeries shifted_down() const {
        TaylorSeries r(order() - 1);
        for (int j = 1; j <= order(); ++j)
            r.c_[j - 1] = c_[j];
        return r;
    }

    // k-th derivative at e = 0.
    C derivative(int k) const {
        C r = c_[k];
        for (int j = 2; j <= k; ++j)
            r *= Real(j);
        return r;
    }

    // Derivatives 0..k at e = delta, from the series about e = 0.
    std::vector<C> derivatives_at(const C& delta, int kmax) const {
        std::vector<C> out(kmax + 1);
        for (int k = 0; k <= kmax; ++k) {
            // sum_{l>=k} c_l l!/(l-k)! delta^(l-k), by Horner.
            C acc;
            for (int l = order(); l >= k; --l) {
                C coef = c_[l];
                for (int j = l - k + 1; j <= l; ++j)
                    coef *= Real(j);
                acc = acc * delta + coef;
            }
            out[k] = acc;
        }
        return out;
    }

private:
    std::vector<C> c_;
};

template <typename Real>
TaylorSeries<Real> exp(const TaylorSeries<Real>& a) {
    TaylorSeries<Real> r(a.order());
    r[0] = exp(a[0]);
    for (int n = 1; n <= a.order(); ++n) {
        Complex<Real> acc;
        for (int k = 1; k <= n; ++k)
            acc += a[k] * r[n - k] * Real(k);
        r[n] = acc / Real(n);
    }
    return r;
}

template <typename Real>
TaylorSeries<Real> sin(const TaylorSeries<Real>& a) {
    using C = Complex<Real>;
    TaylorSeries<Real> ia = a * C::i();
    TaylorSeries<Real> p = exp(ia), m = exp(ia * C(Real(-1)));
    return (p - m) * (C(Real(1)) / C(Real(0), Real(2)));
}

template <typename Real>
TaylorSeries<Real> cos(const TaylorSeries<Real>& a) {
    using C = Complex<Real>;
    TaylorSeries<Real> ia = a * C::i();
    TaylorSeries<Real> p = exp(ia), m = exp(ia * C(Real(-1)));
    return (p + m) * C(Real(0.5));
}

} // namespace rsg
