#include "rsg/polyalg/special.hpp"

#include <mutex>

namespace rsg {

BigInt factorial(int n) {
    if (n < 0)
        throw DomainError("factorial of negative integer");
    BigInt r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

BigRational bernoulli_number(int n) {
    if (n < 0)
        throw DomainError("Bernoulli index must be nonnegative");
    static std::mutex mu;
    static std::vector<BigRational> table{BigRational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        BigRational acc = 0;
        if (m % 2 == 1 && m > 1) {
            table.emplace_back(0);
            continue;
        }
        for (int k = 0; k < m; ++k)
            if (k < 2 || k % 2 == 0)
                acc += BigRational(binomial(m + 1, k)) * table[k];
        table.push_back(-acc / BigRational(m + 1));
    }
    return table[n];
}

RatPoly bernoulli_poly(int n) {
    std::vector<BigRational> v(n + 1);
    for (int k = 0; k <= n; ++k)
        v[n - k] = BigRational(binomial(n, k)) * bernoulli_number(k);
    return RatPoly(std::move(v));
}

RatPoly hermite_poly(int n) {
    if (n < 0)
        throw DomainError("Hermite index must be nonnegative");
    RatPoly prev(BigRational(1));
    if (n == 0)
        return prev;
    RatPoly two_x = RatPoly::monomial(1, BigRational(2));
    RatPoly cur = two_x;
    for (int k = 1; k < n; ++k) {
        RatPoly next = two_x * cur - prev * BigRational(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace rsg
