#include "rsg/polyalg/poly.hpp"

#include <sstream>

namespace rsg {

GaussPoly to_gauss(const RatPoly& p) {
    std::vector<GaussRational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.emplace_back(c);
    return GaussPoly(std::move(v));
}

BiPoly::BiPoly(const GaussRational& c) {
    if (!c.is_zero())
        terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(int xdeg, int sdeg, const GaussRational& c) {
    BiPoly p;
    p.add_term(xdeg, sdeg, c);
    return p;
}

BiPoly BiPoly::x() { return monomial(1, 0); }
BiPoly BiPoly::sigma() { return monomial(0, 1); }

BiPoly BiPoly::from_sigma(const RatPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k)
        r.add_term(0, k, GaussRational(p.coeffs()[k]));
    return r;
}

BiPoly BiPoly::from_sigma(const GaussPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k)
        r.add_term(0, k, p.coeffs()[k]);
    return r;
}

BiPoly BiPoly::from_x(const GaussPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k)
        r.add_term(k, 0, p.coeffs()[k]);
    return r;
}

void BiPoly::add_term(int xdeg, int sdeg, const GaussRational& c) {
    if (xdeg < 0 || sdeg < 0)
        throw DomainError("negative exponent in BiPoly");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(Key{xdeg, sdeg}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GaussRational BiPoly::coeff(int xdeg, int sdeg) const {
    auto it = terms_.find({xdeg, sdeg});
    return it == terms_.end() ? GaussRational(0) : it->second;
}

int BiPoly::x_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first);
    return d;
}

int BiPoly::sigma_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

GaussPoly BiPoly::x_coefficient(int j) const {
    std::vector<GaussRational> v(std::max(sigma_degree() + 1, 0), GaussRational(0));
    for (const auto& [k, c] : terms_)
        if (k.first == j)
            v[k.second] = c;
    return GaussPoly(std::move(v));
}

BiPoly& BiPoly::operator+=(const BiPoly& p) {
    for (const auto& [k, c] : p.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& p) {
    for (const auto& [k, c] : p.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const GaussRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, v] : r.terms_)
        v = -v;
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::conj_coeffs() const {
    BiPoly r = *this;
    for (auto& [k, v] : r.terms_)
        v = conj(v);
    return r;
}

BiPoly BiPoly::reflect() const {
    // sigma^j -> (1 - sigma)^j expanded binomially.
    BiPoly r;
    for (const auto& [k, c] : terms_) {
        GaussRational sign = (k.first % 2) ? GaussRational(-1) : GaussRational(1);
        BigRational binom = 1;
        for (int m = 0; m <= k.second; ++m) {
            GaussRational term = c * sign * GaussRational(binom);
            if (m % 2)
                term = -term;
            r.add_term(k.first, m, term);
            binom = binom * (k.second - m) / (m + 1);
        }
    }
    return r;
}

GaussPoly BiPoly::at_sigma(const BigRational& s) const {
    std::vector<GaussRational> v(std::max(x_degree() + 1, 0), GaussRational(0));
    for (const auto& [k, c] : terms_) {
        BigRational sp = 1;
        for (int m = 0; m < k.second; ++m)
            sp *= s;
        v[k.first] += c * GaussRational(sp);
    }
    return GaussPoly(std::move(v));
}

std::string serialize(const BiPoly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(it->second) << " * x^" << it->first.first << " * sigma^" << it->first.second;
    }
    return os.str();
}

BiPoly parse_bipoly(const std::string& text) {
    BiPoly p;
    if (text == "0")
        return p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(" + ", pos);
        std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        std::size_t xs = term.find(" * x^");
        std::size_t ss = term.find(" * sigma^");
        if (xs == std::string::npos || ss == std::string::npos || ss < xs)
            throw DomainError("bad monomial: " + term);
        GaussRational c = parse_gauss_rational(term.substr(0, xs));
        int xd = std::stoi(term.substr(xs + 5, ss - xs - 5));
        int sd = std::stoi(term.substr(ss + 9));
        if (!p.coeff(xd, sd).is_zero())
            throw DomainError("repeated monomial: " + term);
        p.add_term(xd, sd, c);
        if (end == std::string::npos)
            break;
        pos = end + 3;
    }
    if (serialize(p) != text)
        throw DomainError("non-canonical polynomial text");
    return p;
}

namespace {

std::string pretty_rational_poly(const GaussPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const GaussRational& c = p.coeffs()[k];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        std::string cs;
        if (c.im == 0)
            cs = c.re.str();
        else if (c.re == 0)
            cs = c.im.str() + "i";
        else
            cs = "(" + to_string(c) + ")";
        os << cs;
        if (k >= 1)
            os << "*" << var;
        if (k >= 2)
            os << "^" << k;
    }
    return first ? "0" : os.str();
}

} // namespace

std::string pretty(const RatPoly& p, const std::string& var) { return pretty_rational_poly(to_gauss(p), var); }

std::string pretty(const GaussPoly& p, const std::string& var) { return pretty_rational_poly(p, var); }

std::string pretty(const BiPoly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = p.x_degree(); j >= 0; --j) {
        GaussPoly c = p.x_coefficient(j);
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << pretty_rational_poly(c, "sigma") << ")";
        if (j >= 1)
            os << "*x";
        if (j >= 2)
            os << "^" << j;
    }
    return os.str();
}

} // namespace rsg
