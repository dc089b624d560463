#include <gtest/gtest.h>

#include <random>

#include "padic/measures.hpp"

using namespace padic;

namespace {

std::vector<std::pair<u64, int>> small_fields() { return {{3, 1}, {5, 1}, {3, 2}, {5, 2}}; }

// A Teichmueller root of unity other than 1: -1 for d = 1, the generator otherwise.
UnramifiedElement sample_z(const UnramifiedField& F, int prec) {
    return F.degree() == 1 ? UnramifiedElement::from_int(F, prec, -1) : UnramifiedElement::generator(F, prec);
}

IwasawaSeries random_level_poly(const UnramifiedField& F, int prec, int n, std::mt19937_64& rng) {
    const std::size_t P = pow_u64(F.prime(), n);
    const u64 m = pow_u64(F.prime(), prec);
    IwasawaSeries f = IwasawaSeries::zero(UnramifiedElement(F, prec), P);
    for (std::size_t k = 0; k < P; ++k) {
        std::vector<i64> c(static_cast<std::size_t>(F.degree()));
        for (auto& x : c) x = static_cast<i64>(rng() % m);
        f[k] = UnramifiedElement::from_coords(F, prec, c);
    }
    f.level_certificate = n;
    return f;
}

bool same_level(const std::vector<UnramifiedElement>& a, const std::vector<UnramifiedElement>& b, int k) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].congruent(b[i], k)) return false;
    return true;
}

}  // namespace

TEST(Amice, RoundTripThroughPartialValues) {
    std::mt19937_64 rng(11);
    const int M = 10;
    for (auto [p, d] : small_fields()) {
        const auto& F = UnramifiedField::get(p, d);
        for (int n = 1; n <= 3; ++n) {
            IwasawaSeries f = random_level_poly(F, M, n, rng);
            const u64 P = pow_u64(p, n);
            std::vector<UnramifiedElement> mu;
            for (u64 a = 0; a < P; ++a) mu.push_back(partial_value_from_series(f, a, n));
            IwasawaSeries back = series_from_level(mu, P);
            back.level_certificate = n;
            EXPECT_TRUE(same_level(level_reduction(back, n), level_reduction(f, n), M - n)) << p << " " << d << " " << n;
            EXPECT_TRUE(same_level(mu, level_reduction(f, n), M - n));
        }
    }
}

TEST(Amice, FiniteAdditivityAndTotalMass) {
    std::mt19937_64 rng(12);
    const auto& F = UnramifiedField::get(5, 2);
    IwasawaSeries f = random_level_poly(F, 10, 2, rng);
    PMeasure mu = PMeasure::generic(f);
    UnramifiedElement total(F, 10);
    for (u64 a = 0; a < 5; ++a) {
        UnramifiedElement s(F, 10);
        for (u64 j = 0; j < 5; ++j) s += partial_value(mu, a + 5 * j, 2);
        EXPECT_TRUE(s.congruent(partial_value(mu, a, 1), 8));
        total += s;
    }
    EXPECT_TRUE(total.congruent(f[0], 8));
}

TEST(Koblitz, LevelOneValues) {
    const auto& F = UnramifiedField::get(3, 1);
    PMeasure mu = koblitz_measure(UnramifiedElement::from_int(F, 8, -1), 40);
    // 1/2, -1/2, 1/2
    EXPECT_EQ(partial_value(mu, 0, 1).coord(0) % 3, 2u);
    EXPECT_EQ(partial_value(mu, 1, 1).coord(0) % 3, 1u);
    EXPECT_EQ(partial_value(mu, 2, 1).coord(0) % 3, 2u);
    EXPECT_TRUE(partial_value(mu, 1, 1).congruent(UnramifiedElement::from_padic(F, PadicInt::from_fraction(3, 8, -1, 2))));
    // amice = 1/(2+T)
    IwasawaSeries two_plus_t = series_from_ints(F, 8, {2, 1}, 40);
    IwasawaSeries prod = mu.amice() * two_plus_t;
    EXPECT_TRUE(prod[0].congruent(prod[0].one_like()));
    for (std::size_t k = 1; k < prod.size(); ++k) EXPECT_TRUE(prod[k].is_zero());
}

TEST(Koblitz, ClosedFormMatchesAmiceSeries) {
    const int M = 8;
    for (auto [p, d] : small_fields()) {
        const auto& F = UnramifiedField::get(p, d);
        UnramifiedElement z = sample_z(F, M + 4);
        for (int n = 1; n <= 3; ++n) {
            const u64 P = pow_u64(p, n);
            PMeasure mu = koblitz_measure(z, (M + 4) * P);
            std::vector<UnramifiedElement> closed;
            for (u64 a = 0; a < P; ++a) closed.push_back(partial_value(mu, a, n));
            EXPECT_TRUE(same_level(closed, level_reduction(mu.amice(), n), M)) << p << " " << d << " " << n;
            if (n <= 2) {
                u64 a = P - 1;
                EXPECT_TRUE(partial_value_from_series(mu.amice(), a, n).congruent(closed[a], M));
            }
            // restriction to the units: closed form, zero on p Z_p
            PMeasure ru = restrict_units(mu);
            std::vector<UnramifiedElement> red = level_reduction(ru.amice(), n);
            for (u64 a = 0; a < P; ++a) {
                if (a % p == 0)
                    EXPECT_TRUE(red[a].lowered_to(M).is_zero());
                else
                    EXPECT_TRUE(red[a].congruent(closed[a], M));
            }
        }
    }
}

TEST(Koblitz, RestrictionRoutesAgreeAndIdempotent) {
    const auto& F = UnramifiedField::get(3, 2);
    const int M = 10;
    UnramifiedElement z = sample_z(F, M);
    PMeasure mu = koblitz_measure(z, 120);
    PMeasure closed = restrict_units(mu);
    PMeasure generic = restrict_units(PMeasure::generic(mu.amice()));
    const std::size_t n = std::min<std::size_t>(generic.amice().size(), 40);
    for (std::size_t k = 0; k < n; ++k) EXPECT_TRUE(generic.amice()[k].congruent(closed.amice()[k], M - 1)) << k;
    PMeasure twice = restrict_units(PMeasure::generic(closed.amice()));
    for (std::size_t k = 0; k < n; ++k) EXPECT_TRUE(twice.amice()[k].congruent(closed.amice()[k], M - 1)) << k;
    // A delta mass at 0 restricts to nothing.
    PMeasure delta0 = PMeasure::generic(IwasawaSeries::one(UnramifiedElement(F, M), 120));
    EXPECT_TRUE(restrict_units(delta0).amice().truncated(30).is_zero());
}

TEST(Koblitz, ScalingUnderBranchRoots) {
    const auto& F = UnramifiedField::get(5, 2);
    UnramifiedElement z = UnramifiedElement::generator(F, 10);
    PMeasure mu = koblitz_measure(z, 10);
    for (int k = 1; k <= 2; ++k) {
        PMeasure muk = koblitz_measure(branch_root(z, k), 10);
        const u64 pk = pow_u64(5, k);
        for (u64 a : {0u, 1u, 7u, 24u})
            EXPECT_TRUE(partial_value(muk, pk * a, 2 + k).congruent(partial_value(mu, a, 2)));
    }
}

TEST(Koblitz, MomentsMatchExpansionOf1OverOneMinusZeX) {
    for (auto [p, d] : small_fields()) {
        const auto& F = UnramifiedField::get(p, d);
        const int M = 10;
        UnramifiedElement z = sample_z(F, M);
        PMeasure mu = koblitz_measure(z, 30);
        // c_k (1 - z) = [k = 0] + z sum_{j<k} C(k, j) c_j
        std::vector<UnramifiedElement> c;
        UnramifiedElement inv = (z.one_like() - z).inverse();
        for (int k = 0; k < 12; ++k) {
            UnramifiedElement s = k == 0 ? z.one_like() : z.zero_like();
            for (int j = 0; j < k; ++j) s += z * c[static_cast<std::size_t>(j)] * static_cast<i64>(binomial(k, j));
            c.push_back(s * inv);
            EXPECT_TRUE(moment(mu, k, MomentDomain::Zp, 1).congruent(c.back(), M)) << p << " " << d << " " << k;
        }
    }
}

TEST(Koblitz, NegativeMomentIsLiOne) {
    const auto& F = UnramifiedField::get(3, 1);
    const int M = 8;
    PMeasure mu = koblitz_measure(UnramifiedElement::from_int(F, M, -1), 40);
    UnramifiedElement li = moment(mu, -1, MomentDomain::Zp_units, 3);
    // finite sum at level 8
    const u64 m = pow_u64(3, 8);
    u64 s = 0;
    for (u64 a = 1; a < m; ++a) {
        if (a % 3 == 0) continue;
        u64 t = invmod(a, m);
        s = (a % 2) ? submod(s, t, m) : addmod(s, t, m);
    }
    s = mulmod(s, invmod(2, m), m);
    EXPECT_TRUE(li.congruent(UnramifiedElement::from_int(F, 8, static_cast<i64>(s)), 8));
    // -(1 - 1/3) log 2
    UnramifiedElement lg = log_unit(UnramifiedElement::from_int(F, 12, 2)).divide_by_p(1) * static_cast<i64>(-2);
    EXPECT_TRUE(li.congruent(lg, 8));
    EXPECT_THROW(moment(mu, -1, MomentDomain::Zp, 3), std::domain_error);
}

TEST(Koblitz, NegativeMomentsGenericRouteAgrees) {
    const auto& F = UnramifiedField::get(5, 2);
    const int M = 8;
    UnramifiedElement z = UnramifiedElement::generator(F, M);
    PMeasure mu = koblitz_measure(z, 5 * 125 + 10);
    PMeasure g = PMeasure::generic(mu.amice());
    for (i64 k : {-1, -2, -3}) {
        UnramifiedElement closed = moment(mu, k, MomentDomain::Zp_units, 2);
        EXPECT_EQ(closed.prec(), M);
        UnramifiedElement plain = moment(g, k, MomentDomain::Zp_units, 2);
        EXPECT_TRUE(closed.congruent(plain, 2)) << k;
    }
}

TEST(Bernoulli, PartialValuesAreAdditiveAndIndependentOfLift) {
    const BernoulliTable& B = BernoulliTable::shared();
    for (u64 p : {3u, 5u, 7u})
        for (i64 c : {2, -1, 4, 8}) {
            if (c % static_cast<i64>(p) == 0) continue;
            for (int n = 1; n <= 3; ++n) {
                const u64 P = pow_u64(p, n);
                u64 cbar = invmod(reduce_signed(c, P), P);
                for (u64 a = 0; a < P; ++a) {
                    Rational v = bernoulli_ball_value(p, c, 1, a, n);
                    Rational alt = B.eval(1, Rational(static_cast<i64>(a), static_cast<i64>(P))) -
                                   Rational(c) * B.eval(1, frac(Rational(static_cast<i64>((cbar + P) * a), static_cast<i64>(P))));
                    EXPECT_EQ(v, alt);
                    Rational sum = 0;
                    for (u64 j = 0; j < p; ++j) sum += bernoulli_ball_value(p, c, 1, a + j * P, n + 1);
                    EXPECT_EQ(sum, v);
                }
            }
        }
}

TEST(Bernoulli, AmiceSeriesMatchesPartialValues) {
    for (auto [p, d] : small_fields()) {
        const auto& F = UnramifiedField::get(p, d);
        const int M = 8;
        for (i64 c : {i64{2}, i64{-1}, static_cast<i64>(p) + 1}) {
            for (int n = 1; n <= 2; ++n) {
                const u64 P = pow_u64(p, n);
                PMeasure E = bernoulli_measure(F, M + 3, c, (M + 3) * P);
                std::vector<UnramifiedElement> red = level_reduction(E.amice(), n);
                UnramifiedElement total(F, M);
                for (u64 a = 0; a < P; ++a) {
                    EXPECT_TRUE(red[a].congruent(partial_value(E, a, n), M)) << p << " " << c << " " << a;
                    total += partial_value(E, a, n);
                }
                EXPECT_TRUE(total.congruent(E.amice()[0], M));
            }
        }
    }
    EXPECT_THROW(bernoulli_measure(UnramifiedField::get(3, 1), 8, 1, 20), std::domain_error);
    EXPECT_THROW(bernoulli_measure(UnramifiedField::get(3, 1), 8, 6, 20), std::domain_error);
}

TEST(Bernoulli, MomentsOnUnitsMatchBernoulliNumbers) {
    const BernoulliTable& B = BernoulliTable::shared();
    for (u64 p : {3u, 5u, 7u}) {
        const auto& F = UnramifiedField::get(p, 1);
        for (i64 c : {2, 3, 7}) {
            if (c % static_cast<i64>(p) == 0) continue;
            PMeasure E = bernoulli_measure(F, 12, c, 40);
            for (int m = 1; m <= 8; ++m) {
                BigInt cm = 1, pm1 = 1;
                for (int i = 0; i < m; ++i) cm *= c;
                for (int i = 0; i + 1 < m; ++i) pm1 *= p;
                Rational expect = Rational(1 - cm) * Rational(1 - pm1) * B.number(m) / m;
                // exact: the level-3 sum of the Bernoulli distribution E_{m,c}
                Rational exact = 0;
                const u64 P = pow_u64(p, 3);
                for (u64 a = 1; a < P; ++a)
                    if (a % p) exact += bernoulli_ball_value(p, c, m, a, 3);
                EXPECT_EQ(exact, expect) << p << " " << c << " " << m;
                // series route
                UnramifiedElement got = moment(E, m - 1, MomentDomain::Zp_units, 1);
                EXPECT_TRUE(got.congruent(UnramifiedElement::from_padic(F, to_padic_int(expect, p, 10)), 10));
            }
        }
    }
    // E_2, p = 5, x^1 on the units: (1-4)(1-5)(1/6)/2 = 1
    PMeasure E2 = bernoulli_measure(UnramifiedField::get(5, 1), 10, 2, 30);
    EXPECT_TRUE(moment(E2, 1, MomentDomain::Zp_units, 1).congruent(UnramifiedElement::from_int(UnramifiedField::get(5, 1), 10, 1)));
}

TEST(Bernoulli, NegativeMomentsAgreeWithPlainRiemannSums) {
    for (u64 p : {3u, 5u}) {
        const auto& F = UnramifiedField::get(p, 1);
        const int L = p == 3 ? 8 : 6;
        const u64 P = pow_u64(p, L);
        for (i64 c : {2, 7}) {
            PMeasure E = bernoulli_measure(F, 10, c, 30);
            for (i64 m = 1; m <= 4; ++m) {
                UnramifiedElement fast = moment(E, -m, MomentDomain::Zp_units, 2);
                // E_c(a + p^L) = (a - c r)/p^L + (c - 1)/2 with r = c^{-1} a mod p^L
                u64 cbar = invmod(reduce_signed(c, P), P);
                PadicInt s = PadicInt::zero(p, L), half = PadicInt::from_fraction(p, L, c - 1, 2);
                for (u64 a = 1; a < P; ++a) {
                    if (a % p == 0) continue;
                    i64 r = static_cast<i64>(mulmod(cbar, a, P));
                    i64 q = (static_cast<i64>(a) - c * r) / static_cast<i64>(P);
                    s += (PadicInt::from_int(p, L, q) + half) * PadicInt::from_int(p, L, static_cast<i64>(a)).inverse().pow(static_cast<u64>(m));
                }
                EXPECT_TRUE(fast.congruent(UnramifiedElement::from_padic(F, s), L)) << p << " " << c << " " << m;
            }
        }
    }
}
