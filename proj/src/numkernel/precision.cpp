#include "rsg/numkernel/precision.hpp"

#include <mpfr.h>

#include <cstdio>
#include <cstdlib>
#include <memory>

namespace rsg {

void PrecisionConfig::validate() const {
    if (digits < 15 || digits > 400)
        throw DomainError("digits must lie in [15, 400], got " + std::to_string(digits));
    if (guard_digits < 0 || guard_digits > 100)
        throw DomainError("guard_digits must lie in [0, 100]");
}

PrecisionScope::PrecisionScope(const PrecisionConfig& cfg) : PrecisionScope(cfg.working_digits()) {
    cfg.validate();
}

PrecisionScope::PrecisionScope(int working_digits) : saved_(WideReal::default_precision()) {
    if (working_digits < 10)
        throw DomainError("working precision below 10 digits");
    WideReal::default_precision(static_cast<unsigned>(working_digits));
}

PrecisionScope::~PrecisionScope() { WideReal::default_precision(saved_); }

template <>
double from_rational<double>(const BigRational& q) {
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_q(tmp, q.backend().data(), MPFR_RNDN);
    double d = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    return d;
}

template <>
WideReal from_rational<WideReal>(const BigRational& q) {
    WideReal r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

template <>
double parse_real<double>(const std::string& text) {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size())
        throw DomainError("not a number: " + text);
    return v;
}

template <>
WideReal parse_real<WideReal>(const std::string& text) {
    WideReal r;
    if (mpfr_set_str(r.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("not a number: " + text);
    return r;
}

namespace {

struct MpfrString {
    char* p = nullptr;
    ~MpfrString() {
        if (p)
            mpfr_free_str(p);
    }
};

std::string strip_negative_zero(std::string s) {
    if (!s.empty() && s[0] == '-') {
        bool all_zero = true;
        for (std::size_t i = 1; i < s.size(); ++i) {
            char c = s[i];
            if (c == 'e' || c == 'E')
                break;
            if (c != '0' && c != '.') {
                all_zero = false;
                break;
            }
        }
        if (all_zero)
            s.erase(0, 1);
    }
    return s;
}

std::string sprintf_mpfr(const char* fmt, int width, mpfr_srcptr x) {
    MpfrString buf;
    if (mpfr_asprintf(&buf.p, fmt, width, x) < 0)
        throw std::runtime_error("mpfr_asprintf failed");
    return std::string(buf.p);
}

std::string significant_impl(mpfr_srcptr x, int significant) {
    if (significant < 1)
        significant = 1;
    if (mpfr_nan_p(x))
        return "nan";
    if (mpfr_inf_p(x))
        return mpfr_signbit(x) ? "-inf" : "inf";
    if (mpfr_zero_p(x))
        return "0";
    std::string sci = sprintf_mpfr("%.*RNe", significant - 1, x);
    auto epos = sci.find('e');
    int exponent = std::atoi(sci.c_str() + epos + 1);
    if (exponent < -6 || exponent >= 21)
        return strip_negative_zero(sci);
    int decimals = significant - 1 - exponent;
    if (decimals < 0)
        decimals = 0;
    return strip_negative_zero(sprintf_mpfr("%.*RNf", decimals, x));
}

} // namespace

std::string format_significant(const WideReal& x, int significant) {
    return significant_impl(x.backend().data(), significant);
}

std::string format_significant(double x, int significant) {
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_d(tmp, x, MPFR_RNDN);
    std::string s = significant_impl(tmp, significant);
    mpfr_clear(tmp);
    return s;
}

std::string format_fixed(const WideReal& x, int decimals) {
    return strip_negative_zero(sprintf_mpfr("%.*RNf", decimals, x.backend().data()));
}

std::string format_fixed(double x, int decimals) {
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_d(tmp, x, MPFR_RNDN);
    std::string s = strip_negative_zero(sprintf_mpfr("%.*RNf", decimals, tmp));
    mpfr_clear(tmp);
    return s;
}

} // namespace rsg
