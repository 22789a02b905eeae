#pragma once

#include "rsg/polyalg/poly.hpp"

namespace rsg {

BigInt factorial(int n);
BigInt binomial(int n, int k);

// B_n with B_1 = -1/2.
BigRational bernoulli_number(int n);

// B_n(x) = sum_k C(n,k) B_k x^(n-k).
RatPoly bernoulli_poly(int n);

// Physicists' Hermite polynomial, H_0 = 1, H_1 = 2x.
RatPoly hermite_poly(int n);

} // namespace rsg
