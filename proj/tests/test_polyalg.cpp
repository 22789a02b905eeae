#include "doctest.h"

#include "rsg/polyalg/bell.hpp"
#include "rsg/polyalg/special.hpp"

#include <functional>
#include <map>

using namespace rsg;

namespace {

BigRational Q(long long n, long long d = 1) { return BigRational(n) / BigRational(d); }

// Partition-sum definition of the ordinary Bell polynomial:
// sum over l_1 + ... + l_n = j, sum m l_m = i of j!/(l_1! ...) prod p_m^l_m.
BigRational bell_by_partitions(int i, int j, const std::vector<BigRational>& p) {
    BigRational total = 0;
    std::vector<int> mult(i + 1, 0);
    std::function<void(int, int, int)> rec = [&](int part, int remaining, int count) {
        if (remaining == 0) {
            if (count != j)
                return;
            BigRational term = BigRational(factorial(j));
            for (int m = 1; m <= i; ++m) {
                term /= BigRational(factorial(mult[m]));
                for (int e = 0; e < mult[m]; ++e)
                    term *= p[m - 1];
            }
            total += term;
            return;
        }
        if (part == 0 || count > j)
            return;
        for (int l = remaining / part; l >= 0; --l) {
            mult[part] = l;
            rec(part - 1, remaining - l * part, count + l);
        }
        mult[part] = 0;
    };
    if (i == 0)
        return j == 0 ? BigRational(1) : BigRational(0);
    rec(i, i, 0);
    return total;
}

} // namespace

TEST_CASE("Bernoulli numbers match known values") {
    CHECK(bernoulli_number(0) == Q(1));
    CHECK(bernoulli_number(1) == Q(-1, 2));
    CHECK(bernoulli_number(2) == Q(1, 6));
    CHECK(bernoulli_number(3) == Q(0));
    CHECK(bernoulli_number(4) == Q(-1, 30));
    CHECK(bernoulli_number(12) == Q(-691, 2730));
    CHECK(bernoulli_number(20) == Q(-174611, 330));
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(1) == RatPoly(std::vector<BigRational>{Q(-1, 2), Q(1)}));
    CHECK(bernoulli_poly(2) == RatPoly(std::vector<BigRational>{Q(1, 6), Q(-1), Q(1)}));
    CHECK(bernoulli_poly(3) == RatPoly(std::vector<BigRational>{Q(0), Q(1, 2), Q(-3, 2), Q(1)}));

    RatPoly one_minus_x = RatPoly::linear(Q(-1), Q(1));
    RatPoly x_plus_one = RatPoly::linear(Q(1), Q(1));
    for (int n = 0; n <= 30; ++n) {
        RatPoly b = bernoulli_poly(n);
        RatPoly reflected = b.compose(one_minus_x);
        CHECK(reflected == b * Q(n % 2 ? -1 : 1));
        // B_n(x+1) - B_n(x) = n x^(n-1)
        RatPoly diff = b.compose(x_plus_one) - b;
        CHECK(diff == (n == 0 ? RatPoly() : RatPoly::monomial(n - 1, Q(n))));
        if (n >= 1)
            CHECK(b.derivative() == bernoulli_poly(n - 1) * Q(n));
    }
}

TEST_CASE("Bernoulli polynomials at 1/4 follow the closed form") {
    for (int n = 1; n <= 15; ++n) {
        BigRational expected = BigRational(1) / BigRational(BigInt(1) << (2 * n)) *
                               (BigRational(1) / BigRational(BigInt(1) << (2 * n - 1)) - 1) *
                               (n % 2 ? 1 : -1) * abs(bernoulli_number(2 * n));
        CHECK(bernoulli_poly(2 * n)(Q(1, 4)) == expected);
    }
}

TEST_CASE("Hermite polynomials") {
    CHECK(hermite_poly(0) == RatPoly(Q(1)));
    CHECK(hermite_poly(1) == RatPoly::monomial(1, Q(2)));
    CHECK(hermite_poly(3) == RatPoly(std::vector<BigRational>{Q(0), Q(-12), Q(0), Q(8)}));
    CHECK(hermite_poly(4) == RatPoly(std::vector<BigRational>{Q(12), Q(0), Q(-48), Q(0), Q(16)}));
    for (int n = 1; n <= 25; ++n) {
        CHECK(hermite_poly(n).derivative() == hermite_poly(n - 1) * Q(2 * n));
        CHECK(hermite_poly(n).coeff(n) == BigRational(BigInt(1) << n));
    }
}

TEST_CASE("Bell table agrees with the partition-sum definition") {
    std::vector<BigRational> p;
    for (int m = 1; m <= 12; ++m)
        p.push_back(Q((m % 3 == 0 ? -1 : 1) * (2 * m + 1), m * m + 3));
    BellTable<BigRational> bell(p);
    for (int i = 0; i <= 12; ++i)
        for (int j = 0; j <= i; ++j)
            CHECK(bell(i, j) == bell_by_partitions(i, j, p));
}

TEST_CASE("Bell polynomial identities") {
    std::vector<BigRational> p{Q(3, 7), Q(-2, 5), Q(5, 11), Q(1, 13), Q(-9, 4), Q(2, 3), Q(7), Q(-1, 9), Q(4, 5), Q(1, 2)};
    BellTable<BigRational> bell(p);
    auto pw = [](BigRational b, int e) {
        BigRational r = 1;
        for (int k = 0; k < e; ++k)
            r *= b;
        return r;
    };
    const auto &p1 = p[0], &p2 = p[1], &p3 = p[2], &p4 = p[3], &p5 = p[4];
    CHECK(bell(8, 4) == pw(p2, 4) + 12 * p1 * p2 * p2 * p3 + 6 * p1 * p1 * p3 * p3 + 12 * p1 * p1 * p2 * p4 +
                            4 * pw(p1, 3) * p5);
    for (int r = 1; r <= 8; ++r) {
        CHECK(bell(r, r) == pw(p1, r));
        CHECK(bell(r + 1, r) == r * pw(p1, r - 1) * p2);
        if (r + 2 <= 10)
            CHECK(bell(r + 2, r) == BigRational(binomial(r, 2)) * pw(p1, r - 2) * p2 * p2 + r * pw(p1, r - 1) * p3);
    }
    BellTable<BigRational> ones(std::vector<BigRational>(10, Q(1)));
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= i; ++j)
            CHECK(ones(i, j) == BigRational(binomial(i - 1, j - 1)));
}

TEST_CASE("Bell table over polynomial entries") {
    // p_m = m * s: Bhat_{i,j} = s^j * Bhat_{i,j}(1, 2, 3, ...)
    std::vector<RatPoly> p;
    std::vector<BigRational> pn;
    for (int m = 1; m <= 7; ++m) {
        p.push_back(RatPoly::monomial(1, Q(m)));
        pn.push_back(Q(m));
    }
    BellTable<RatPoly> bp(p);
    BellTable<BigRational> bn(pn);
    for (int i = 0; i <= 7; ++i)
        for (int j = 0; j <= i; ++j)
            CHECK(bp(i, j) == RatPoly::monomial(j, bn(i, j)));
}

TEST_CASE("Gaussian rational text round trip") {
    for (auto z : {GaussRational(Q(-1, 3)), GaussRational(Q(0), Q(-1)), GaussRational(Q(1, 2), Q(-1, 3)),
                   GaussRational(Q(7), Q(22, 7)), GaussRational(Q(0))}) {
        CHECK(parse_gauss_rational(to_string(z)) == z);
    }
    CHECK(to_string(GaussRational(Q(-1, 3))) == "-1/3+0i");
    CHECK(to_string(GaussRational(Q(0), Q(-1))) == "0-1i");
    CHECK_THROWS_AS(parse_gauss_rational("1/2"), DomainError);
    CHECK_THROWS_AS(parse_gauss_rational("a+bi"), DomainError);
}

TEST_CASE("BiPoly serialization round trip and ordering") {
    BiPoly p = BiPoly::monomial(3, 0, GaussRational(Q(0), Q(1, 3))) + BiPoly::monomial(1, 1, GaussRational(1)) +
               BiPoly::monomial(1, 0, GaussRational(Q(-1, 2)));
    std::string text = serialize(p);
    CHECK(text == "0+1/3i * x^3 * sigma^0 + 1+0i * x^1 * sigma^1 + -1/2+0i * x^1 * sigma^0");
    CHECK(parse_bipoly(text) == p);
    CHECK(serialize(BiPoly()) == "0");
    CHECK(parse_bipoly("0").is_zero());
    CHECK_THROWS_AS(parse_bipoly("1+0i * x^0 * sigma^0 + 1+0i * x^1 * sigma^0"), DomainError);
}

TEST_CASE("BiPoly reflection and conjugation") {
    BiPoly x = BiPoly::x(), s = BiPoly::sigma();
    BiPoly p = x * x * s + GaussRational::i() * x * s * s + BiPoly(GaussRational(Q(2, 3)));
    BiPoly one_minus_s = BiPoly(GaussRational(1)) - s;
    BiPoly expected = x * x * one_minus_s - GaussRational::i() * x * one_minus_s * one_minus_s + BiPoly(GaussRational(Q(2, 3)));
    CHECK(p.reflect() == expected);
    CHECK(p.reflect().reflect() == p);
    CHECK(p.conj_coeffs().conj_coeffs() == p);
    CHECK(p.at_sigma(Q(1, 2)) == GaussPoly(std::vector<GaussRational>{GaussRational(Q(2, 3)), GaussRational(Q(0), Q(1, 4)),
                                                                      GaussRational(Q(1, 2))}));
}
