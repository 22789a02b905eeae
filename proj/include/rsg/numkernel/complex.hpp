#pragma once

#include "rsg/numkernel/precision.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace rsg {

// Minimal complex number over an arbitrary real scalar. std::complex is only
// specified for the built-in floating types, so wide values need their own.
template <typename Real>
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}

    static Complex i() { return Complex(Real(0), Real(1)); }

    Complex& operator+=(const Complex& z) { re += z.re; im += z.im; return *this; }
    Complex& operator-=(const Complex& z) { re -= z.re; im -= z.im; return *this; }
    Complex& operator*=(const Complex& z) {
        Real r = re * z.re - im * z.im;
        im = re * z.im + im * z.re;
        re = r;
        return *this;
    }
    Complex& operator/=(const Complex& z) {
        Real d = z.re * z.re + z.im * z.im;
        Real r = (re * z.re + im * z.im) / d;
        im = (im * z.re - re * z.im) / d;
        re = r;
        return *this;
    }
    Complex& operator*=(const Real& x) { re *= x; im *= x; return *this; }
    Complex& operator/=(const Real& x) { re /= x; im /= x; return *this; }

    Complex operator-() const { return Complex(-re, -im); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(Complex a, const Real& x) { return a *= x; }
    friend Complex operator*(const Real& x, Complex a) { return a *= x; }
    friend Complex operator/(Complex a, const Real& x) { return a /= x; }
    friend Complex operator+(Complex a, const Real& x) { a.re += x; return a; }
    friend Complex operator+(const Real& x, Complex a) { a.re += x; return a; }
    friend Complex operator-(Complex a, const Real& x) { a.re -= x; return a; }
    friend Complex operator-(const Real& x, const Complex& a) { return Complex(x - a.re, -a.im); }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        return os << '(' << z.re << ", " << z.im << ')';
    }
};

template <typename Real>
Complex<Real> conj(const Complex<Real>& z) { return Complex<Real>(z.re, -z.im); }

template <typename Real>
Real norm(const Complex<Real>& z) { return z.re * z.re + z.im * z.im; }

template <typename Real>
Real abs(const Complex<Real>& z) {
    using std::abs;
    using std::sqrt;
    Real a = abs(z.re), b = abs(z.im);
    if (a < b)
        std::swap(a, b);
    if (a == 0)
        return a;
    Real q = b / a;
    return a * sqrt(1 + q * q);
}

template <typename Real>
Real arg(const Complex<Real>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

template <typename Real>
Complex<Real> polar(const Real& r, const Real& phi) {
    using std::cos;
    using std::sin;
    return Complex<Real>(r * cos(phi), r * sin(phi));
}

template <typename Real>
Complex<Real> exp(const Complex<Real>& z) {
    using std::exp;
    return polar(exp(z.re), z.im);
}

// Principal branch, Im in (-pi, pi].
template <typename Real>
Complex<Real> log(const Complex<Real>& z) {
    using std::log;
    if (z.re == 0 && z.im == 0)
        throw DomainError("log of zero");
    return Complex<Real>(log(abs(z)), arg(z));
}

template <typename Real>
Complex<Real> sqrt(const Complex<Real>& z) {
    using std::abs;
    using std::sqrt;
    if (z.re == 0 && z.im == 0)
        return z;
    Real r = abs(z);
    if (z.re >= 0) {
        Real w = sqrt((r + z.re) / 2);
        return Complex<Real>(w, z.im / (2 * w));
    }
    Real w = sqrt((r - z.re) / 2);
    Real sgn = z.im < 0 ? Real(-1) : Real(1);
    return Complex<Real>(abs(z.im) / (2 * w), sgn * w);
}

template <typename Real>
Complex<Real> pow(const Complex<Real>& z, const Complex<Real>& w) {
    return exp(w * log(z));
}

template <typename Real>
Complex<Real> pow(const Complex<Real>& z, long long n) {
    if (n < 0)
        return Complex<Real>(Real(1)) / pow(z, -n);
    Complex<Real> result(Real(1)), base = z;
    while (n) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

template <typename Real>
Complex<Real> sin(const Complex<Real>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return Complex<Real>(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}

template <typename Real>
Complex<Real> cos(const Complex<Real>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return Complex<Real>(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}

// i^k for integer k.
template <typename Real>
Complex<Real> i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return Complex<Real>(Real(1), Real(0));
    case 1: return Complex<Real>(Real(0), Real(1));
    case 2: return Complex<Real>(Real(-1), Real(0));
    default: return Complex<Real>(Real(0), Real(-1));
    }
}

// exp(pi i k / 8) for integer k.
template <typename Real>
Complex<Real> eighth_root_power(long long k) {
    Real phi = pi_of<Real>() * Real(((k % 16) + 16) % 16) / 8;
    return polar(Real(1), phi);
}

template <typename Real>
Complex<Real> parse_complex(const std::string& text);

template <typename Real>
std::string format_complex(const Complex<Real>& z, int significant) {
    std::string re = format_significant(z.re, significant);
    std::string im = format_significant(z.im, significant);
    if (!im.empty() && im[0] == '-')
        return re + " - " + im.substr(1) + "i";
    return re + " + " + im + "i";
}

using WideComplex = Complex<WideReal>;

} // namespace rsg
