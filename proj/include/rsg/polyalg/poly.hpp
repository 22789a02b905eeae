#pragma once

#include "rsg/numkernel/complex.hpp"
#include "rsg/polyalg/gauss_rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rsg {

// Dense univariate polynomial, coefficients in ascending degree, no trailing
// zeros. C is BigRational or GaussRational.
template <typename C>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const C& c) : coeffs_{c} { strip(); }
    explicit UniPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

    static UniPoly monomial(int degree, const C& c = C(1)) {
        std::vector<C> v(degree + 1, C(0));
        v[degree] = c;
        return UniPoly(std::move(v));
    }
    // a*x + b
    static UniPoly linear(const C& a, const C& b) { return UniPoly(std::vector<C>{b, a}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    C coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : C(0); }
    const std::vector<C>& coeffs() const { return coeffs_; }

    UniPoly& operator+=(const UniPoly& p) {
        if (p.coeffs_.size() > coeffs_.size())
            coeffs_.resize(p.coeffs_.size(), C(0));
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
            coeffs_[k] += p.coeffs_[k];
        strip();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& p) { return *this += -p; }
    UniPoly& operator*=(const C& c) {
        for (auto& a : coeffs_)
            a *= c;
        strip();
        return *this;
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.coeffs_)
            a = -a;
        return r;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const C& c) { return a *= c; }
    friend UniPoly operator*(const C& c, UniPoly a) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(v));
    }
    UniPoly& operator*=(const UniPoly& p) { return *this = *this * p; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // p(q(x))
    UniPoly compose(const UniPoly& q) const {
        UniPoly r;
        for (int k = degree(); k >= 0; --k)
            r = r * q + UniPoly(coeffs_[k]);
        return r;
    }

    C operator()(const C& x) const {
        C r(0);
        for (int k = degree(); k >= 0; --k)
            r = r * x + coeffs_[k];
        return r;
    }

    UniPoly derivative() const {
        std::vector<C> v;
        for (int k = 1; k <= degree(); ++k)
            v.push_back(coeffs_[k] * C(k));
        return UniPoly(std::move(v));
    }

private:
    void strip() {
        while (!coeffs_.empty() && coeffs_.back() == C(0))
            coeffs_.pop_back();
    }
    std::vector<C> coeffs_;
};

using RatPoly = UniPoly<BigRational>;
using GaussPoly = UniPoly<GaussRational>;

template <typename Real>
Real eval_real(const RatPoly& p, const Real& x) {
    Real r(0);
    for (int k = p.degree(); k >= 0; --k)
        r = r * x + from_rational<Real>(p.coeffs()[k]);
    return r;
}

template <typename Real>
Complex<Real> eval_complex(const RatPoly& p, const Complex<Real>& z) {
    Complex<Real> r;
    for (int k = p.degree(); k >= 0; --k)
        r = r * z + Complex<Real>(from_rational<Real>(p.coeffs()[k]));
    return r;
}

template <typename Real>
Complex<Real> eval_complex(const GaussPoly& p, const Complex<Real>& z) {
    Complex<Real> r;
    for (int k = p.degree(); k >= 0; --k)
        r = r * z + p.coeffs()[k].template to_complex<Real>();
    return r;
}

GaussPoly to_gauss(const RatPoly& p);

// Sparse polynomial in (x, sigma) over the Gaussian rationals. Keys are
// (x degree, sigma degree); zero coefficients are never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(const GaussRational& c);
    static BiPoly monomial(int xdeg, int sdeg, const GaussRational& c = GaussRational(1));
    static BiPoly x();
    static BiPoly sigma();
    static BiPoly from_sigma(const RatPoly& p);
    static BiPoly from_sigma(const GaussPoly& p);
    static BiPoly from_x(const GaussPoly& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, GaussRational>& terms() const { return terms_; }
    GaussRational coeff(int xdeg, int sdeg) const;
    int x_degree() const;
    int sigma_degree() const;

    // Coefficient of x^j as a polynomial in sigma.
    GaussPoly x_coefficient(int j) const;

    BiPoly& operator+=(const BiPoly& p);
    BiPoly& operator-=(const BiPoly& p);
    BiPoly& operator*=(const GaussRational& c);
    BiPoly operator-() const;
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const GaussRational& c) { return a *= c; }
    friend BiPoly operator*(const GaussRational& c, BiPoly a) { return a *= c; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& p) { return *this = *this * p; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Conjugate every coefficient.
    BiPoly conj_coeffs() const;
    // p(-x, 1 - sigma)
    BiPoly reflect() const;
    // p(x, s) for exact rational s, as a polynomial in x.
    GaussPoly at_sigma(const BigRational& s) const;

    template <typename Real>
    Complex<Real> eval(const Complex<Real>& x, const Real& sigma) const;

    void add_term(int xdeg, int sdeg, const GaussRational& c);

private:
    std::map<Key, GaussRational> terms_;
};

template <typename Real>
Complex<Real> BiPoly::eval(const Complex<Real>& xv, const Real& sigma) const {
    if (terms_.empty())
        return Complex<Real>();
    int xd = x_degree(), sd = sigma_degree();
    std::vector<Complex<Real>> xp(xd + 1);
    std::vector<Real> sp(sd + 1);
    xp[0] = Complex<Real>(Real(1));
    for (int j = 1; j <= xd; ++j)
        xp[j] = xp[j - 1] * xv;
    sp[0] = Real(1);
    for (int j = 1; j <= sd; ++j)
        sp[j] = sp[j - 1] * sigma;
    Complex<Real> sum;
    for (const auto& [key, c] : terms_)
        sum += c.template to_complex<Real>() * xp[key.first] * sp[key.second];
    return sum;
}

// Monomials ordered by descending x degree then descending sigma degree,
// joined by " + ": "1/3+0i * x^2 * sigma^0 + 0-1i * x^0 * sigma^1".
// The zero polynomial is "0".
std::string serialize(const BiPoly& p);
BiPoly parse_bipoly(const std::string& text);

// Human-readable rendering, e.g. "(i/3)*x^3 + (sigma - 1/2)*x".
std::string pretty(const BiPoly& p);
std::string pretty(const RatPoly& p, const std::string& var);
std::string pretty(const GaussPoly& p, const std::string& var);

} // namespace rsg
