#pragma once

#include "rsg/numkernel/complex.hpp"
#include "rsg/numkernel/precision.hpp"

#include <string>

namespace rsg {

// Exact a + b i with rational a, b.
struct GaussRational {
    BigRational re{0};
    BigRational im{0};

    GaussRational() = default;
    GaussRational(const BigRational& r) : re(r), im(0) {}
    GaussRational(const BigRational& r, const BigRational& i) : re(r), im(i) {}
    GaussRational(long long r) : re(r), im(0) {}

    static GaussRational i() { return GaussRational(BigRational(0), BigRational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRational& operator+=(const GaussRational& z) { re += z.re; im += z.im; return *this; }
    GaussRational& operator-=(const GaussRational& z) { re -= z.re; im -= z.im; return *this; }
    GaussRational& operator*=(const GaussRational& z) {
        BigRational r = re * z.re - im * z.im;
        im = re * z.im + im * z.re;
        re = r;
        return *this;
    }
    GaussRational& operator/=(const GaussRational& z) {
        BigRational d = z.re * z.re + z.im * z.im;
        if (d == 0)
            throw DomainError("division by zero Gaussian rational");
        BigRational r = (re * z.re + im * z.im) / d;
        im = (im * z.re - re * z.im) / d;
        re = r;
        return *this;
    }
    GaussRational operator-() const { return GaussRational(-re, -im); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    template <typename Real>
    Complex<Real> to_complex() const {
        return Complex<Real>(from_rational<Real>(re), from_rational<Real>(im));
    }
};

inline GaussRational conj(const GaussRational& z) { return GaussRational(z.re, -z.im); }

// i^k exactly.
GaussRational i_power(long long k);

// "re+imi" with each part as "num/den" or an integer, e.g. "-1/3+0i", "0-1i".
std::string to_string(const GaussRational& z);
GaussRational parse_gauss_rational(const std::string& text);

} // namespace rsg
