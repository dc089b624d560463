#include "padic/bernoulli.hpp"

#include <stdexcept>

namespace padic {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BernoulliTable::BernoulliTable(int K) {
    if (K < 1) throw std::invalid_argument("BernoulliTable: K must be positive");
    b_.assign(static_cast<std::size_t>(K) + 1, Rational(0));
    b_[0] = 1;
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    for (int n = 1; n <= K; ++n) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * b_[static_cast<std::size_t>(j)];
        b_[static_cast<std::size_t>(n)] = -s / (n + 1);
    }
    poly_.resize(b_.size());
    for (int n = 0; n <= K; ++n) {
        auto& c = poly_[static_cast<std::size_t>(n)];
        c.assign(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(n - j)] = Rational(binomial(n, j)) * b_[static_cast<std::size_t>(j)];
    }
}

const BernoulliTable& BernoulliTable::shared() {
    static const BernoulliTable table(32);
    return table;
}

const Rational& BernoulliTable::number(int n) const {
    if (n < 0 || n > max_index()) throw std::out_of_range("BernoulliTable: index beyond table");
    return b_[static_cast<std::size_t>(n)];
}

const std::vector<Rational>& BernoulliTable::poly(int n) const {
    if (n < 0 || n > max_index()) throw std::out_of_range("BernoulliTable: index beyond table");
    return poly_[static_cast<std::size_t>(n)];
}

Rational BernoulliTable::eval(int n, const Rational& x) const {
    const auto& c = poly(n);
    Rational r = 0;
    for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
    return r;
}

Rational frac(const Rational& x) {
    BigInt n = numerator(x), d = denominator(x);
    BigInt r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
}

int valuation(const BigInt& x, u64 p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    BigInt y = x;
    int v = 0;
    while (y % p == 0) {
        y /= p;
        ++v;
    }
    return v;
}

namespace {

u64 mod_big(const BigInt& x, u64 m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

}  // namespace

PadicNumber to_padic(const Rational& x, u64 p, int prec) {
    if (x == 0) return PadicNumber(PadicInt::zero(p, prec), 0);
    BigInt n = numerator(x), d = denominator(x);
    int vn = valuation(n, p), vd = valuation(d, p);
    BigInt pp = 1;
    for (int i = 0; i < vn; ++i) pp *= p;
    n /= pp;
    pp = 1;
    for (int i = 0; i < vd; ++i) pp *= p;
    d /= pp;
    const u64 m = pow_u64(p, prec);
    PadicInt unit(p, prec, mulmod(mod_big(n, m), invmod(mod_big(d, m), m), m));
    int v = vn - vd;
    if (v >= 0) return PadicNumber(unit.mul_p(v), 0);
    return PadicNumber(unit, -v);
}

PadicInt to_padic_int(const Rational& x, u64 p, int prec) {
    BigInt d = denominator(x);
    if (d % p == 0) throw std::domain_error("to_padic_int: denominator divisible by p");
    const u64 m = pow_u64(p, prec);
    return PadicInt(p, prec, mulmod(mod_big(numerator(x), m), invmod(mod_big(d, m), m), m));
}

}  // namespace padic
