#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rsg {

using WideReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working precision for a run. `digits` is the number of decimal digits the
// caller wants; wide arithmetic carries `guard_digits` extra.
struct PrecisionConfig {
    int digits = 40;
    bool fast_mode = false;
    int guard_digits = 10;

    void validate() const;
    int working_digits() const { return fast_mode ? 15 : digits + guard_digits; }
};

// Sets the WideReal default precision for the lifetime of the scope. The
// underlying default is process wide, so scopes must not be opened
// concurrently with different values.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionConfig& cfg);
    explicit PrecisionScope(int working_digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

template <typename Real>
int decimal_digits();

template <>
inline int decimal_digits<double>() { return std::numeric_limits<double>::digits10; }

template <>
inline int decimal_digits<WideReal>() { return static_cast<int>(WideReal::default_precision()); }

template <typename Real>
Real epsilon_of() {
    using std::pow;
    return pow(Real(10), -decimal_digits<Real>());
}

template <typename Real>
Real pi_of();

template <>
inline double pi_of<double>() { return 3.14159265358979323846; }

template <>
inline WideReal pi_of<WideReal>() {
    WideReal r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

template <typename Real>
Real from_rational(const BigRational& q);

template <>
double from_rational<double>(const BigRational& q);

template <>
WideReal from_rational<WideReal>(const BigRational& q);

template <typename Real>
Real parse_real(const std::string& text);

template <>
double parse_real<double>(const std::string& text);

template <>
WideReal parse_real<WideReal>(const std::string& text);

template <typename Real>
double to_double(const Real& x) {
    return static_cast<double>(x);
}

template <typename Real>
long long floor_to_int(const Real& x) {
    using std::floor;
    return static_cast<long long>(floor(x));
}

// Decimal rendering, round-half-even, "-0" normalized to "0".
std::string format_significant(const WideReal& x, int significant);
std::string format_significant(double x, int significant);
std::string format_fixed(const WideReal& x, int decimals);
std::string format_fixed(double x, int decimals);

} // namespace rsg
