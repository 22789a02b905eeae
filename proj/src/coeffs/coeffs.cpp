#include "rsg/coeffs/coeffs.hpp"

#include "rsg/polyalg/bell.hpp"
#include "rsg/polyalg/special.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace rsg {

namespace {

BigRational Q(long long n, long long d = 1) { return BigRational(n) / BigRational(d); }

// Bell table over a lazily extended sequence; rebuilt with doubled size when
// a larger index is requested.
template <typename T, typename Gen>
class GrowingBell {
public:
    explicit GrowingBell(Gen gen) : gen_(gen) {}

    T get(int i, int j) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!table_ || table_->max_index() < i) {
            int size = std::max(i, table_ ? 2 * table_->max_index() : 16);
            std::vector<T> p;
            for (int m = 1; m <= size; ++m)
                p.push_back(gen_(m));
            table_ = std::make_unique<BellTable<T>>(std::move(p));
        }
        return (*table_)(i, j);
    }

private:
    Gen gen_;
    std::mutex mu_;
    std::unique_ptr<BellTable<T>> table_;
};

template <typename K, typename V>
class Memo {
public:
    template <typename F>
    V get(const K& key, F compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end())
                return it->second;
        }
        V value = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<K, V> map_;
};

auto& f_bell() {
    static GrowingBell<RatPoly, RatPoly (*)(int)> b(&f_poly);
    return b;
}

auto& g_bell() {
    static GrowingBell<RatPoly, RatPoly (*)(int)> b(&g_poly);
    return b;
}

BigRational cubic_seq(int j) { return Q(j % 2 ? 1 : -1, j + 2); }
BigRational log_seq(int j) { return Q(j % 2 ? 1 : -1, j); }

auto& cubic_bell() {
    static GrowingBell<BigRational, BigRational (*)(int)> b(&cubic_seq);
    return b;
}

auto& log_bell() {
    static GrowingBell<BigRational, BigRational (*)(int)> b(&log_seq);
    return b;
}

BigRational inv_factorial(int k) { return BigRational(1) / BigRational(factorial(k)); }

void require(bool ok, const char* what) {
    if (!ok)
        throw DomainError(what);
}

} // namespace

RatPoly f_poly(int n) {
    require(n >= 1, "f_n needs n >= 1");
    static Memo<int, RatPoly> memo;
    return memo.get(n, [n] {
        RatPoly b = bernoulli_poly(n + 1);
        RatPoly half = RatPoly::linear(Q(1, 2), Q(0));
        RatPoly half_reflected = RatPoly::linear(Q(-1, 2), Q(1, 2));
        RatPoly r = b.compose(half) + b.compose(half_reflected) * Q((n + 1) % 2 ? -1 : 1);
        return r * Q(1, 2 * n * (n + 1));
    });
}

RatPoly g_poly(int n) {
    require(n >= 1, "g_n needs n >= 1");
    return bernoulli_poly(n + 1) * Q(-1, n * (n + 1));
}

RatPoly u_poly(int m) {
    require(m >= 0, "u_m needs m >= 0");
    static Memo<int, RatPoly> memo;
    return memo.get(m, [m] {
        if (m == 0)
            return RatPoly(Q(1));
        RatPoly sum;
        for (int k = 1; k <= m; ++k)
            sum += f_bell().get(m, k) * inv_factorial(k);
        BigRational scale = 1;
        for (int j = 0; j < m; ++j)
            scale *= -2;
        return sum * scale;
    });
}

GaussPoly gamma_poly(int m) {
    require(m >= 0, "gamma_m needs m >= 0");
    static Memo<int, GaussPoly> memo;
    return memo.get(m, [m] {
        if (m == 0)
            return GaussPoly(GaussRational(1));
        RatPoly sum;
        for (int k = 1; k <= m; ++k)
            sum += g_bell().get(m, k) * inv_factorial(k);
        return to_gauss(sum) * i_power(m);
    });
}

RatPoly d_poly(int m, int r) {
    require(m >= 0 && r >= 0, "d_{m,r} needs m, r >= 0");
    if (r > m)
        return RatPoly();
    static Memo<std::pair<int, int>, RatPoly> memo;
    return memo.get({m, r}, [m, r] {
        RatPoly shift = RatPoly::linear(Q(1), Q(-1));
        RatPoly sum;
        for (int n = r; n <= m; ++n) {
            BigRational outer = cubic_bell().get(n, r) * inv_factorial(r);
            if (outer == 0)
                continue;
            RatPoly inner;
            RatPoly power(Q(1));
            for (int k = 0; k <= m - n; ++k) {
                inner += power * (log_bell().get(m - n, k) * inv_factorial(k));
                power *= shift;
            }
            sum += inner * outer;
        }
        return sum;
    });
}

RatPoly q_poly(int n, int j) {
    require(n >= 0, "q_{n,j} needs n >= 0");
    if (j < 0 || j > 3 * n || (3 * n - j) % 2 != 0)
        return RatPoly();
    static Memo<std::pair<int, int>, RatPoly> memo;
    return memo.get({n, j}, [n, j] {
        int l = (3 * n - j) / 2;
        RatPoly sum;
        for (int m = std::max(0, l - n); m <= l / 3; ++m)
            sum += u_poly(m) * d_poly(n - 2 * m, n - l + m);
        return sum;
    });
}

RatPoly s_poly(int n, int m) {
    require(n >= 0 && m >= 0 && m <= 3 * n / 2, "s_{n,m} needs 0 <= m <= 3n/2");
    RatPoly sum;
    BigRational four = 1;
    for (int l = 0; l <= m; ++l) {
        BigRational w = four * BigRational(factorial(3 * n - 2 * l)) * inv_factorial(m - l);
        sum += q_poly(n, 3 * n - 2 * l) * w;
        four *= 4;
    }
    return sum;
}

const BiPoly& p_poly(int n, int k) {
    require(n >= 0 && k >= 0 && k <= 3 * n, "P_{n,k} needs 0 <= k <= 3n");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<const BiPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, k});
        if (it != cache.end())
            return *it->second;
    }
    BiPoly result;
    for (int l = 0; l <= k / 2; ++l) {
        RatPoly q = q_poly(n, 3 * n - 2 * l);
        if (q.is_zero())
            continue;
        BigRational w = BigRational(binomial(3 * n - 2 * l, 3 * n - k)) * Q((n + l) % 2 ? -1 : 1) /
                        BigRational(BigInt(1) << (k - 2 * l));
        RatPoly h = hermite_poly(k - 2 * l);
        BiPoly qs = BiPoly::from_sigma(q * w);
        for (int p = 0; p <= h.degree(); ++p) {
            if (h.coeff(p) == 0)
                continue;
            // Phase exp(3 pi i k/4) exp(-pi i p/4) = i^((3k-p)/2); p and k share parity.
            int e = 3 * k - p;
            if (e % 2 != 0)
                throw std::logic_error("odd phase exponent in P_{n,k}");
            result += qs * BiPoly::monomial(p, 0, i_power(e / 2) * GaussRational(h.coeff(p)));
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(n, k), std::make_unique<const BiPoly>(std::move(result)));
    return *it->second;
}

BiPoly p_poly_via_s(int n, int k) {
    require(n >= 0 && k >= 0 && k <= 3 * n, "P_{n,k} needs 0 <= k <= 3n");
    BiPoly result;
    GaussRational prefactor = i_power(k) * GaussRational(Q(n % 2 ? -1 : 1) * inv_factorial(3 * n - k));
    GaussRational four_i_inv(1);
    const GaussRational step = GaussRational(1) / GaussRational(BigRational(0), BigRational(4));
    for (int m = 0; m <= k / 2; ++m) {
        GaussRational c = prefactor * four_i_inv * GaussRational(inv_factorial(k - 2 * m));
        result += BiPoly::from_sigma(s_poly(n, m)) * BiPoly::monomial(k - 2 * m, 0, c);
        four_i_inv *= step;
    }
    return result;
}

BiPoly a_poly(int k) {
    require(k >= 0, "a_k needs k >= 0");
    BiPoly result;
    for (int r = 0; 3 * r <= k; ++r)
        result += BiPoly::from_sigma(d_poly(k - 2 * r, r)) * BiPoly::monomial(k - 2 * r, 0, i_power(r));
    return result;
}

BiPoly a_poly_by_recursion(int k) {
    require(k >= 0, "a_k needs k >= 0");
    std::vector<BiPoly> a{BiPoly(GaussRational(1))};
    const BiPoly x = BiPoly::x(), sigma = BiPoly::sigma();
    for (int j = 0; j < k; ++j) {
        // a_{j+1} = x (-(j+1-sigma) a_j + i a_{j-2}) / (j+1)
        BiPoly next = (sigma - BiPoly(GaussRational(j + 1))) * a[j];
        if (j >= 2)
            next += GaussRational::i() * a[j - 2];
        a.push_back(x * next * GaussRational(Q(1, j + 1)));
    }
    return a[k];
}

template <typename Real>
Complex<Real> a_eval(const Complex<Real>& s, int k) {
    using std::pow;
    using std::sqrt;
    require(k >= 0, "a_k needs k >= 0");
    const Real t = s.im;
    require(t > 0, "a_k needs Im s > 0");
    const Real x = 1 / sqrt(t);
    Complex<Real> sum;
    for (int r = 0; 3 * r <= k; ++r)
        sum += i_pow<Real>(r) * eval_real(d_poly(k - 2 * r, r), s.re) * pow(x, k - 2 * r);
    return sum;
}

template <typename Real>
Complex<Real> a_eval_by_recursion(const Complex<Real>& s, int k) {
    using std::sqrt;
    require(k >= 0, "a_k needs k >= 0");
    require(s.im > 0, "a_k needs Im s > 0");
    const Real root_t = sqrt(s.im);
    std::vector<Complex<Real>> a{Complex<Real>(Real(1))};
    for (int j = 0; j < k; ++j) {
        Complex<Real> next = (s.re - Real(j + 1)) * a[j];
        if (j >= 2)
            next += Complex<Real>::i() * a[j - 2];
        a.push_back(next / (Real(j + 1) * root_t));
    }
    return a[k];
}

template Complex<double> a_eval(const Complex<double>&, int);
template Complex<WideReal> a_eval(const Complex<WideReal>&, int);
template Complex<double> a_eval_by_recursion(const Complex<double>&, int);
template Complex<WideReal> a_eval_by_recursion(const Complex<WideReal>&, int);

} // namespace rsg
