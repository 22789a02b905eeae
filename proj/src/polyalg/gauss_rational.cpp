#include "rsg/polyalg/gauss_rational.hpp"

#include <cctype>

namespace rsg {

GaussRational i_power(long long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return GaussRational(1);
    case 1: return GaussRational(BigRational(0), BigRational(1));
    case 2: return GaussRational(-1);
    default: return GaussRational(BigRational(0), BigRational(-1));
    }
}

std::string to_string(const GaussRational& z) {
    std::string re = z.re.str();
    std::string im = z.im.str();
    if (im[0] == '-')
        return re + im + "i";
    return re + "+" + im + "i";
}

namespace {

BigRational parse_rational(const std::string& s) {
    if (s.empty())
        throw DomainError("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        throw DomainError("bad rational: " + s);
    int slashes = 0;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '/')
            ++slashes;
        else if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw DomainError("bad rational: " + s);
    }
    if (slashes > 1)
        throw DomainError("bad rational: " + s);
    std::string body = s[0] == '+' ? s.substr(1) : s;
    return BigRational(body);
}

} // namespace

GaussRational parse_gauss_rational(const std::string& text) {
    if (text.size() < 2 || text.back() != 'i')
        throw DomainError("bad Gaussian rational: " + text);
    // The imaginary part starts at the last sign that is not the first char.
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size() - 1; i > 0; --i)
        if (text[i] == '+' || text[i] == '-') {
            split = i;
            break;
        }
    if (split == std::string::npos)
        throw DomainError("bad Gaussian rational: " + text);
    return GaussRational(parse_rational(text.substr(0, split)),
                         parse_rational(text.substr(split, text.size() - split - 1)));
}

} // namespace rsg
