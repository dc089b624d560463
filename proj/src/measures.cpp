#include "padic/measures.hpp"

#include <stdexcept>
#include <string>

#include "padic/cyclo.hpp"
#include "padic/iwasawa.hpp"

namespace padic {

namespace {

u64 mod_big(const BigInt& x, u64 m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

// Generalized binomial C(k, j) for any integer k, reduced mod p^prec.
PadicInt binomial_mod(i64 k, int j, u64 p, int prec) {
    BigInt r = 1;
    for (int i = 0; i < j; ++i) r *= BigInt(k - i);
    for (int i = 2; i <= j; ++i) r /= i;
    return PadicInt(p, prec, mod_big(r, pow_u64(p, prec)));
}

// a^e for a unit a and any integer e.
PadicInt unit_pow(u64 p, int prec, u64 a, i64 e) {
    PadicInt x = PadicInt::from_int(p, prec, static_cast<i64>(a));
    if (e < 0) return x.inverse().pow(static_cast<u64>(-e));
    return x.pow(static_cast<u64>(e));
}

// Number of Taylor terms so that the remainder p^{level * J} is below p^prec.
int taylor_terms(int prec, int level) { return (prec + level - 1) / level + 1; }

// Ball moments int_{a + p^L Z_p} (x - a)^j dmu_z = z^a p^{Lj} M_j(z^{p^L}), M_j(w) = D^j(1/(1 - w(1+T)))(0).
UnramifiedElement koblitz_negative_sum(const UnramifiedElement& z, i64 k, int level) {
    const UnramifiedField& F = z.field();
    const u64 p = F.prime();
    const int prec = z.prec();
    if (level > max_precision(p)) throw PrecisionError("moment: level exceeds capacity");
    const u64 P = pow_u64(p, level);
    const int J = taylor_terms(prec, level);
    UnramifiedElement w = z.pow(P);
    IwasawaSeries G = (IwasawaSeries::one(w, static_cast<std::size_t>(J) + 1) -
                       IwasawaSeries::one_plus_t(w, static_cast<std::size_t>(J) + 1) * w)
                          .inverse();
    std::vector<UnramifiedElement> ball(static_cast<std::size_t>(J), UnramifiedElement(F, prec));
    IwasawaSeries Dj = G;
    for (int j = 0; j < J; ++j) {
        ball[static_cast<std::size_t>(j)] = Dj[0].mul_p(level * j).lowered_to(prec);
        Dj = diff_D(Dj);
    }
    std::vector<PadicInt> binom;
    for (int j = 0; j < J; ++j) binom.push_back(binomial_mod(k, j, p, prec));
    UnramifiedElement s(F, prec), za = UnramifiedElement::from_int(F, prec, 1);
    for (u64 a = 0; a < P; ++a, za *= z) {
        if (a % p == 0) continue;
        PadicInt ainv = PadicInt::from_int(p, prec, static_cast<i64>(a)).inverse();
        PadicInt apow = unit_pow(p, prec, a, k);
        UnramifiedElement inner(F, prec);
        for (int j = 0; j < J; ++j) {
            inner += ball[static_cast<std::size_t>(j)] * (binom[static_cast<std::size_t>(j)] * apow);
            apow *= ainv;
        }
        s += za * inner;
    }
    return s;
}

// Same scheme for E_c: int_{ball} (x - a)^j dE_{1,c} = sum_i C(j, i) (-a)^{j-i} E_{i+1,c}(ball).
PadicInt bernoulli_negative_sum(u64 p, int prec, i64 c, i64 k, int level) {
    const u64 P = pow_u64(p, level);
    const int J = taylor_terms(prec, level);
    if (J + 1 > BernoulliTable::shared().max_index()) throw PrecisionError("moment: level too low for the Bernoulli table");
    std::vector<PadicInt> binom;
    for (int j = 0; j < J; ++j) binom.push_back(binomial_mod(k, j, p, prec));
    PadicInt s = PadicInt::zero(p, prec);
    std::vector<Rational> E(static_cast<std::size_t>(J));
    for (u64 a = 1; a < P; ++a) {
        if (a % p == 0) continue;
        for (int i = 0; i < J; ++i) E[static_cast<std::size_t>(i)] = bernoulli_ball_value(p, c, i + 1, a, level);
        PadicInt ainv = PadicInt::from_int(p, prec, static_cast<i64>(a)).inverse();
        PadicInt apow = unit_pow(p, prec, a, k);
        for (int j = 0; j < J; ++j) {
            Rational I = 0;
            BigInt ma = 1;  // (-a)^{j-i}
            for (int i = j; i >= 0; --i) {
                I += Rational(binomial(j, i) * ma) * E[static_cast<std::size_t>(i)];
                ma *= -static_cast<i64>(a);
            }
            if (I != 0) s += to_padic_int(I, p, prec) * binom[static_cast<std::size_t>(j)] * apow;
            apow *= ainv;
        }
    }
    return s;
}

UnramifiedElement generic_negative_sum(const PMeasure& mu, i64 k, int level) {
    const u64 p = mu.prime();
    std::vector<UnramifiedElement> v = level_reduction(mu.amice(), level);
    const int prec = std::min(v[0].prec(), level);
    UnramifiedElement s(mu.field(), prec);
    for (u64 a = 1; a < v.size(); ++a)
        if (a % p) s += v[a].lowered_to(prec) * unit_pow(p, prec, a, k);
    return s;
}

UnramifiedElement negative_moment(const PMeasure& mu, i64 k, int level) {
    switch (mu.kind()) {
    case MeasureKind::koblitz: return koblitz_negative_sum(mu.z(), k, level);
    case MeasureKind::bernoulli:
        return UnramifiedElement::from_padic(mu.field(), bernoulli_negative_sum(mu.prime(), mu.prec(), mu.c(), k, level));
    case MeasureKind::generic: break;
    }
    return generic_negative_sum(mu, k, level);
}

}  // namespace

PMeasure PMeasure::generic(IwasawaSeries amice, bool units_only) {
    PMeasure m;
    m.prec_ = amice.size() ? amice[0].prec() : amice.proto().prec();
    m.amice_ = std::move(amice);
    m.units_only_ = units_only;
    return m;
}

PMeasure koblitz_measure(const UnramifiedElement& z, std::size_t n_terms) {
    if (!is_teichmuller(z)) throw std::domain_error("koblitz_measure: z must be a root of unity of order prime to p");
    if ((z - z.one_like()).valuation() > 0)
        throw std::domain_error(
            "koblitz_measure: z = 1 has a pole at T = 0; use the Bernoulli measure E_c to cancel it");
    PMeasure m;
    m.kind_ = MeasureKind::koblitz;
    m.prec_ = z.prec();
    m.z_ = z;
    m.amice_ = (IwasawaSeries::one(z, n_terms) - IwasawaSeries::one_plus_t(z, n_terms) * z).inverse();
    return m;
}

PMeasure bernoulli_measure(const UnramifiedField& F, int prec, i64 c, std::size_t n_terms) {
    const u64 p = F.prime();
    if (c == 1 || c % static_cast<i64>(p) == 0) throw std::domain_error("bernoulli_measure: need c != 1 and p not dividing c");
    // 1/T - c/((1+T)^c - 1) = [((1+T)^c - 1 - cT)/T^2] / [((1+T)^c - 1)/T]
    IwasawaSeries pw = one_plus_t_pow(F, prec, n_terms + 2, c);
    IwasawaSeries num = IwasawaSeries::zero(UnramifiedElement(F, prec), n_terms);
    IwasawaSeries den = num;
    for (std::size_t k = 0; k < n_terms; ++k) {
        num[k] = pw[k + 2];
        den[k] = pw[k + 1];
    }
    PMeasure m;
    m.kind_ = MeasureKind::bernoulli;
    m.c_ = c;
    m.amice_ = num * den.inverse();
    m.prec_ = std::min(prec, m.amice_.prec());
    return m;
}

PMeasure restrict_units(const PMeasure& mu) {
    if (mu.units_only()) return mu;
    PMeasure r = mu;
    r.units_only_ = true;
    const std::size_t n = mu.amice().size();
    switch (mu.kind()) {
    case MeasureKind::koblitz: {
        const UnramifiedElement& z = mu.z();
        UnramifiedElement zp = z.pow(mu.prime());
        IwasawaSeries tail = IwasawaSeries::one(z, n) - one_plus_t_pow(z.field(), z.prec(), n, static_cast<i64>(mu.prime())) * zp;
        r.amice_ = mu.amice() - tail.inverse();
        break;
    }
    case MeasureKind::bernoulli:
        // E_c is invariant under the trace operator, so its restriction to p Z_p is [p] E_c.
        r.amice_ = mu.amice() - pmap(mu.amice());
        break;
    case MeasureKind::generic: {
        IwasawaSeries t = trace_projection(mu.amice());
        r.amice_ = mu.amice().truncated(t.size()) - t;
        r.prec_ = t.size() ? std::min(mu.prec(), t[0].prec()) : 0;
        break;
    }
    }
    return r;
}

Rational bernoulli_ball_value(u64 p, i64 c, int k, u64 a, int n) {
    const BernoulliTable& B = BernoulliTable::shared();
    const u64 P = pow_u64(p, n);
    const i64 Pi = static_cast<i64>(P);
    u64 cbar = invmod(reduce_signed(c, P), P);
    u64 r = mulmod(cbar, a % P, P);
    BigInt Pk1 = 1;
    for (int i = 0; i + 1 < k; ++i) Pk1 *= Pi;
    auto Ek = [&](u64 b) { return Rational(Pk1) * B.eval(k, Rational(static_cast<i64>(b), Pi)) / k; };
    BigInt ck = 1;
    for (int i = 0; i < k; ++i) ck *= c;
    return Ek(a % P) - Rational(ck) * Ek(r);
}

UnramifiedElement partial_value_from_series(const IwasawaSeries& f, u64 a, int n) {
    const UnramifiedField& F = f.proto().field();
    const u64 P = pow_u64(F.prime(), n);
    if (a >= P) throw std::invalid_argument("partial_value: representative must lie in [0, p^n)");
    // zeta^{-a} = zeta^{p^n - a}; (1+T)^{p^n - a} is a polynomial, so the product stays exact.
    IwasawaSeries tw = one_plus_t_pow(F, f.prec(), f.size() + P, static_cast<i64>(P - a));
    IwasawaSeries g = f.padded(f.size() + P) * tw;
    if (!f.level_certificate) g = g.truncated(f.size());
    g.level_certificate = f.level_certificate;
    return int_n(g, n);
}

std::vector<UnramifiedElement> level_reduction(const IwasawaSeries& f, int n) {
    const UnramifiedField& F = f.proto().field();
    const std::size_t P = pow_u64(F.prime(), n);
    // (u - 1)^{p^n} vanishes mod p in O_F[u]/(u^{p^n} - 1): coefficient k only needs
    // prec - floor(k / p^n) digits, and the truncated tail costs floor(N / p^n).
    bool certified = f.level_certificate && *f.level_certificate >= n;
    int prec = f.proto().prec();
    for (std::size_t k = 0; k < f.size(); ++k) prec = std::min<int>(prec, f[k].prec() + static_cast<int>(k / P));
    if (!certified && n > 0) prec = std::min<int>(prec, static_cast<int>(f.size() / P));
    if (prec <= 0) throw PrecisionError("level_reduction: truncation too short for level " + std::to_string(n));
    const UnramifiedElement zero(F, prec);
    auto lift = [&](const UnramifiedElement& x, int keep) {
        std::vector<i64> c;
        for (u64 v : x.lowered_to(keep).coords()) c.push_back(static_cast<i64>(v));
        return UnramifiedElement::from_coords(F, prec, c);
    };
    std::vector<UnramifiedElement> r(P, zero), next(P, zero);
    for (std::size_t k = f.size(); k-- > 0;) {
        for (std::size_t j = 0; j < P; ++j) next[(j + 1) % P] = r[j];
        for (std::size_t j = 0; j < P; ++j) next[j] -= r[j];
        next[0] += lift(f[k], std::max(0, prec - static_cast<int>(k / P)));
        std::swap(r, next);
    }
    return r;
}

IwasawaSeries series_from_level(const std::vector<UnramifiedElement>& v, std::size_t n_terms) {
    if (v.empty()) throw std::invalid_argument("series_from_level: empty input");
    const UnramifiedField& F = v[0].field();
    int prec = v[0].prec();
    for (const auto& x : v) prec = std::min(prec, x.prec());
    IwasawaSeries r = IwasawaSeries::zero(UnramifiedElement(F, prec), n_terms);
    // Horner in (1+T): r <- r (1+T) + v[a]
    for (std::size_t a = v.size(); a-- > 0;) {
        for (std::size_t k = n_terms; k-- > 1;) r[k] += r[k - 1];
        r[0] += v[a].lowered_to(prec);
    }
    return r;
}

UnramifiedElement partial_value(const PMeasure& mu, u64 a, int n) {
    const u64 p = mu.prime();
    const u64 P = pow_u64(p, n);
    if (a >= P) throw std::invalid_argument("partial_value: representative must lie in [0, p^n)");
    if (mu.units_only() && a % p == 0 && n > 0) return UnramifiedElement(mu.field(), mu.prec());
    switch (mu.kind()) {
    case MeasureKind::koblitz: {
        const UnramifiedElement& z = mu.z();
        return z.pow(a) * (z.one_like() - z.pow(P)).inverse();
    }
    case MeasureKind::bernoulli:
        return UnramifiedElement::from_padic(mu.field(), to_padic_int(bernoulli_ball_value(p, mu.c(), 1, a, n), p, mu.prec()));
    case MeasureKind::generic: break;
    }
    return partial_value_from_series(mu.amice(), a, n);
}

UnramifiedElement moment(const PMeasure& mu, i64 k, MomentDomain domain, int level) {
    bool units = domain == MomentDomain::Zp_units || mu.units_only();
    if (k < 0 && !units) throw std::domain_error("moment: x^k with k < 0 is undefined at 0; use the units domain");
    if (k >= 0) {
        const PMeasure m = units ? restrict_units(mu) : mu;
        if (m.amice().size() <= static_cast<std::size_t>(k)) throw PrecisionError("moment: Amice series too short");
        return diff_D(m.amice().truncated(static_cast<std::size_t>(k) + 2), static_cast<int>(k))[0];
    }
    const PMeasure m = restrict_units(mu);
    UnramifiedElement lo = negative_moment(m, k, level);
    UnramifiedElement hi = negative_moment(m, k, level + 1);
    int agree = std::min(lo.prec(), hi.prec());
    if (!lo.congruent(hi, agree))
        throw PrecisionError("moment: levels " + std::to_string(level) + " and " + std::to_string(level + 1) + " disagree");
    return lo.lowered_to(agree);
}

}  // namespace padic
