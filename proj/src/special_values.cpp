#include "padic/special_values.hpp"

#include <stdexcept>

namespace padic {

i64 default_aux_c(u64 p, int m) {
    for (i64 c = 2; c < static_cast<i64>(p) + 2; ++c) {
        if (c % static_cast<i64>(p) == 0) continue;
        if (powmod(static_cast<u64>(c) % p, static_cast<u64>(m - 1), p) != 1) return c;
    }
    return 2;
}

PadicNumber lp_value(u64 p, int m, i64 c, int prec) {
    if (m < 2) throw std::domain_error("lp_value: m >= 2 required (pole at m = 1)");
    const auto& F = UnramifiedField::get(p, 1);
    PMeasure E = bernoulli_measure(F, prec, c, 4);
    UnramifiedElement mom = moment(E, -m, MomentDomain::Zp_units, 2);
    PadicInt d = PadicInt::from_int(p, mom.prec(), c).inverse().pow(static_cast<u64>(m - 1)) - PadicInt::one(p, mom.prec());
    if (d.is_zero()) throw std::domain_error("lp_value: c^{1-m} = 1 to working precision, choose a different c");
    return PadicNumber::integral(mom.base_part()).divided_by(d);
}

UnramifiedElement li_p_star(PolylogPoint point, const UnramifiedElement& z, int m, int level) {
    if (m < 1) throw std::domain_error("li_p_star: m >= 1 required");
    if (point == PolylogPoint::one) {
        const u64 p = z.prime();
        PadicNumber v = lp_value(p, m, default_aux_c(p, m), z.prec());
        if (!v.is_integral()) throw std::domain_error("li_p_star: L_p(m, omega^{1-m}) is not integral here");
        return UnramifiedElement::from_padic(z.field(), v.to_integral());
    }
    PMeasure mu = koblitz_measure(z, 4);
    return moment(mu, -m, MomentDomain::Zp_units, level);
}

int frobenius_period(const UnramifiedElement& z) {
    UnramifiedElement x = z;
    const u64 q = z.field().q();
    for (u64 d = 1; d < q; ++d) {
        x = x.pow(z.prime());
        if (x.congruent(z)) return static_cast<int>(d);
    }
    throw std::domain_error("frobenius_period: z is not a root of unity of order prime to p");
}

UnramifiedElement li_padic(const UnramifiedElement& z, int m, int level) {
    const u64 p = z.prime();
    const int prec = z.prec();
    const int d = frobenius_period(z);
    // Li(z_0) = sum_{k<d} p^{m(d-k)} Li^{(p)}(z_k) / (p^{md} - 1)
    UnramifiedElement s(z.field(), prec), zk = z;
    for (int k = 0; k < d; ++k) {
        UnramifiedElement v = li_p_star(PolylogPoint::root_of_unity, zk, m, level);
        s += v.mul_p(m * (d - k)).lowered_to(v.prec());
        zk = zk.pow(p);
    }
    PadicInt den = PadicInt::one(p, prec).mul_p(m * d).with_prec(prec) - PadicInt::one(p, prec);
    return s * den.with_prec(s.prec()).inverse();
}

PowerSumWitness power_sum_divisibility(u64 p, int m, int n) {
    const BernoulliTable& B = BernoulliTable::shared();
    PowerSumWitness w;
    w.n_m = m + 1;
    for (int j = 0; j <= m; ++j) {
        BigInt den = denominator(B.number(j));
        w.n_m = w.n_m / boost::multiprecision::gcd(w.n_m, den) * den;
    }
    BigInt P = 1;
    for (int i = 0; i < n; ++i) P *= p;
    w.sum = 0;
    for (BigInt a = 1; a < P; ++a) {
        if (a % p == 0) continue;
        w.sum += boost::multiprecision::pow(a, static_cast<unsigned>(m));
    }
    BigInt prod = w.n_m * w.sum;
    w.divisible = prod % P == 0;
    w.quotient = prod / P;
    return w;
}

BigInt power_sum_units_bernoulli(u64 p, int m, int n) {
    const BernoulliTable& B = BernoulliTable::shared();
    auto full = [&](const BigInt& N) {
        return (B.eval(m + 1, Rational(N)) - B.number(m + 1)) / (m + 1);
    };
    BigInt P = 1;
    for (int i = 0; i < n; ++i) P *= p;
    BigInt pm = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m));
    Rational r = full(P) - Rational(pm) * full(P / p);
    if (denominator(r) != 1) throw std::logic_error("power_sum_units_bernoulli: non-integral result");
    return numerator(r);
}

namespace {

using RSeries = std::vector<Rational>;

RSeries rinverse(const RSeries& a) {
    RSeries r(a.size(), Rational(0));
    r[0] = 1 / a[0];
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
        r[k] = -s * r[0];
    }
    return r;
}

// T / ((1+T)^a - 1), K terms.
RSeries pole_factor(i64 a, std::size_t K) {
    RSeries q(K, Rational(0));
    BigInt binom = 1;  // C(a, k)
    for (std::size_t k = 1; k <= K; ++k) {
        binom = binom * (a - static_cast<i64>(k) + 1);
        BigInt fact = 1;
        for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned>(i);
        q[k - 1] = Rational(binom, fact);
    }
    return rinverse(q);
}

}  // namespace

std::vector<Rational> cancelled_pole_moments(u64 p, i64 c, int K) {
    const std::size_t N = static_cast<std::size_t>(K) + 1;
    const i64 pi = static_cast<i64>(p);
    RSeries Rp = pole_factor(pi, N), Rc = pole_factor(c, N), Rpc = pole_factor(pi * c, N);
    // T * (F - c sigma_c F) = -1 + R_p + c R_c - c R_{pc}
    RSeries br(N);
    for (std::size_t k = 0; k < N; ++k) br[k] = Rp[k] + Rational(c) * (Rc[k] - Rpc[k]);
    br[0] -= 1;
    if (br[0] != 0) throw std::logic_error("cancelled_pole_moments: pole did not cancel");
    RSeries g(N - 1);
    for (std::size_t k = 0; k + 1 < N; ++k) g[k] = br[k + 1];
    // n! [X^n] sum_k g_k (e^X - 1)^k = sum_k g_k k! S(n, k)
    std::vector<std::vector<BigInt>> S(g.size(), std::vector<BigInt>(g.size(), 0));
    S[0][0] = 1;
    for (std::size_t n = 1; n < g.size(); ++n)
        for (std::size_t k = 1; k <= n; ++k) S[n][k] = BigInt(k) * S[n - 1][k] + S[n - 1][k - 1];
    std::vector<Rational> out(g.size(), Rational(0));
    for (std::size_t n = 0; n < g.size(); ++n) {
        BigInt fact = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) fact *= static_cast<unsigned>(k);
            out[n] += g[k] * Rational(fact * S[n][k]);
        }
    }
    return out;
}

}  // namespace padic
