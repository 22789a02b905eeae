#include "rsg/numkernel/expr.hpp"

#include <cctype>

namespace rsg {

namespace {

template <typename Real>
class Parser {
  public:
    using C = Complex<Real>;

    explicit Parser(const std::string& text) : s_(text) {}

    C parse() {
        C v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("cannot parse \"" + s_ + "\": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    C expr() {
        C v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    bool starts_factor() {
        skip();
        return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(');
    }

    C term() {
        C v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                C d = unary();
                if (d.re == 0 && d.im == 0)
                    fail("division by zero");
                v /= d;
            } else if (starts_factor()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    C unary() {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    C power() {
        C base = primary();
        if (!accept('^'))
            return base;
        C e = unary();
        if (e.im == 0 && e.re == rsg::floor_to_int(e.re))
            return pow(base, static_cast<int>(rsg::floor_to_int(e.re)));
        return pow(base, e);
    }

    C primary() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            C v = expr();
            if (!accept(')'))
                fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return C(number());
        if (std::isalpha(static_cast<unsigned char>(c)))
            return named();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Real number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < s_.size() && (s_[p] == '+' || s_[p] == '-'))
                ++p;
            if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                pos_ = p;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            }
        }
        return parse_real<Real>(s_.substr(start, pos_ - start));
    }

    C named() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name == "pi")
            return C(pi_of<Real>());
        if (name == "i")
            return C::i();
        if (name == "sqrt" || name == "exp" || name == "log") {
            if (!accept('('))
                fail("expected '(' after " + name);
            C arg = expr();
            if (!accept(')'))
                fail("missing ')'");
            if (name == "sqrt")
                return sqrt(arg);
            if (name == "exp")
                return exp(arg);
            if (arg.re == 0 && arg.im == 0)
                fail("log of zero");
            return log(arg);
        }
        fail("unknown name '" + name + "'");
    }
};

} // namespace

template <typename Real>
Complex<Real> evaluate_expression(const std::string& text) {
    return Parser<Real>(text).parse();
}

template <typename Real>
Real evaluate_real_expression(const std::string& text) {
    Complex<Real> v = evaluate_expression<Real>(text);
    if (v.im != 0)
        throw DomainError("expected a real value: " + text);
    return v.re;
}

template <typename Real>
Complex<Real> parse_complex(const std::string& text) {
    return evaluate_expression<Real>(text);
}

template Complex<double> evaluate_expression(const std::string&);
template Complex<WideReal> evaluate_expression(const std::string&);
template double evaluate_real_expression(const std::string&);
template WideReal evaluate_real_expression(const std::string&);
template Complex<double> parse_complex(const std::string&);
template Complex<WideReal> parse_complex(const std::string&);

} // namespace rsg
