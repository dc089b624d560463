#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "padic/unramified.hpp"

using namespace padic;

namespace {

UnramifiedElement random_element(const UnramifiedField& F, int prec, std::mt19937_64& rng) {
    std::vector<i64> c(static_cast<std::size_t>(F.degree()));
    u64 m = pow_u64(F.prime(), prec);
    for (auto& x : c) x = static_cast<i64>(rng() % m);
    return UnramifiedElement::from_coords(F, prec, c);
}

UnramifiedElement random_unit(const UnramifiedField& F, int prec, std::mt19937_64& rng) {
    for (;;) {
        UnramifiedElement x = random_element(F, prec, rng);
        if (x.is_unit()) return x;
    }
}

}  // namespace

TEST(Unramified, TeichmullerTrivialCases) {
    const auto& F = UnramifiedField::get(3, 1);
    EXPECT_TRUE(teichmuller(F, {1}, 10).congruent(UnramifiedElement::from_int(F, 10, 1)));
    EXPECT_EQ(teichmuller(F, {2}, 10).coord(0), pow_u64(3, 10) - 1);
    EXPECT_THROW(teichmuller(F, {3}, 10), std::domain_error);
}

TEST(Unramified, TeichmullerMatchesRootSearch) {
    // the unique x mod 5^4 with x^4 = 1 and x = 2 mod 5, found by exhaustive search
    const auto& F = UnramifiedField::get(5, 1);
    u64 m = 625, found = 0;
    for (u64 x = 2; x < m; x += 5)
        if (powmod(x, 4, m) == 1) found = x;
    EXPECT_EQ(teichmuller(F, {2}, 4).coord(0), found);
}

TEST(Unramified, TeichmullerIsExactRootOfUnity) {
    for (auto [p, d] : {std::pair<u64, int>{3, 2}, {5, 2}, {3, 3}}) {
        const auto& F = UnramifiedField::get(p, d);
        u64 count = pow_u64(p, d);
        for (u64 k = 1; k < count; ++k) {
            std::vector<i64> r(static_cast<std::size_t>(d));
            u64 t = k;
            for (auto& x : r) {
                x = static_cast<i64>(t % p);
                t /= p;
            }
            UnramifiedElement w = teichmuller(F, r, F.capacity());
            EXPECT_TRUE(w.pow(F.q() - 1).congruent(w.one_like()));
            EXPECT_TRUE(w.with_prec(1).congruent(UnramifiedElement::from_coords(F, 1, r)));
        }
    }
}

TEST(Unramified, GeneratorHasFullOrder) {
    const auto& F = UnramifiedField::get(3, 2);
    UnramifiedElement w = UnramifiedElement::generator(F, 20);
    EXPECT_TRUE(w.pow(8).congruent(w.one_like()));
    EXPECT_FALSE(w.pow(4).congruent(w.one_like()));
}

TEST(Unramified, FrobeniusOnDegreeOneIsIdentity) {
    const auto& F = UnramifiedField::get(5, 1);
    UnramifiedElement x = UnramifiedElement::from_int(F, 8, 12345);
    EXPECT_TRUE(frobenius(x).congruent(x));
}

TEST(Unramified, FrobeniusMatchesPowerOnTeichmuller) {
    const auto& F = UnramifiedField::get(3, 2);
    const int M = 12;
    UnramifiedElement w = UnramifiedElement::generator(F, M);
    EXPECT_TRUE(frobenius(w).congruent(w.pow(3)));
    // x = w + 3 w^2 -> w^3 + 3 w^6, expanded with ring multiplication
    UnramifiedElement x = w + w * w * 3;
    UnramifiedElement expect = w.pow(3) + w.pow(6) * 3;
    EXPECT_TRUE(frobenius(x).congruent(expect));
    EXPECT_TRUE(frobenius(frobenius(x)).congruent(x));
    EXPECT_TRUE(frobenius_inverse(frobenius(x)).congruent(x));
}

TEST(Unramified, TraceValues) {
    const auto& F2 = UnramifiedField::get(3, 2);
    UnramifiedElement w = UnramifiedElement::generator(F2, 10);
    UnramifiedElement s = w + w.pow(3);
    ASSERT_TRUE(s.in_base());
    EXPECT_TRUE(trace_to_qp(w).congruent(s.base_part()));
    // w is a root of X^2 - Tr(w) X + N(w)
    EXPECT_TRUE(trace_to_qp(w).congruent(-PadicInt(3, 10, F2.min_poly()[1])));
    const auto& F3 = UnramifiedField::get(5, 3);
    EXPECT_EQ(trace_to_qp(UnramifiedElement::from_int(F3, 6, 1)).residue(), 3u);
    const auto& F1 = UnramifiedField::get(7, 1);
    EXPECT_EQ(trace_to_qp(UnramifiedElement::from_int(F1, 6, 40)).residue(), 40u);
}

TEST(Unramified, TraceFrobeniusInvariance) {
    std::mt19937_64 rng(7);
    for (auto [p, d] : {std::pair<u64, int>{3, 2}, {5, 2}, {3, 4}, {7, 3}}) {
        const auto& F = UnramifiedField::get(p, d);
        for (int i = 0; i < 50; ++i) {
            UnramifiedElement x = random_element(F, 9, rng), y = random_element(F, 9, rng);
            EXPECT_TRUE(trace_to_qp(x * frobenius(y)).congruent(trace_to_qp(frobenius_inverse(x) * y)));
        }
    }
}

TEST(Unramified, InverseAndFrobeniusHomomorphism) {
    std::mt19937_64 rng(11);
    const auto& F = UnramifiedField::get(5, 2);
    for (int i = 0; i < 50; ++i) {
        UnramifiedElement x = random_unit(F, 15, rng), y = random_element(F, 15, rng);
        EXPECT_TRUE((x * x.inverse()).congruent(x.one_like()));
        EXPECT_TRUE(frobenius(x * y).congruent(frobenius(x) * frobenius(y)));
    }
}

TEST(Unramified, LogOfFourMatchesRationalSeries) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    // log(1+3) = sum (-1)^{k+1} 3^k / k, terms beyond k = 40 vanish mod 3^6
    cpp_rational s = 0;
    cpp_int pk = 1;
    for (int k = 1; k <= 40; ++k) {
        pk *= 3;
        cpp_rational term(pk, k);
        s += (k % 2 ? term : -term);
    }
    cpp_int num = numerator(s), den = denominator(s);
    cpp_int m = 729;
    cpp_int dinv = 0;
    for (cpp_int t = 1; t < m; ++t)
        if ((den * t) % m == 1) dinv = t;
    cpp_int expect = ((num % m + m) % m * dinv) % m;
    const auto& F = UnramifiedField::get(3, 1);
    UnramifiedElement l = log_unit(UnramifiedElement::from_int(F, 6, 4));
    EXPECT_EQ(l.coord(0), static_cast<u64>(expect));
}

TEST(Unramified, LogKillsRootsOfUnityAndIsAdditive) {
    std::mt19937_64 rng(3);
    for (auto [p, d] : {std::pair<u64, int>{3, 1}, {3, 2}, {5, 2}}) {
        const auto& F = UnramifiedField::get(p, d);
        const int M = 12;
        EXPECT_TRUE(log_unit(UnramifiedElement::from_int(F, M, 1)).is_zero());
        EXPECT_TRUE(log_unit(UnramifiedElement::generator(F, M)).is_zero());
        for (int i = 0; i < 30; ++i) {
            UnramifiedElement u = random_unit(F, M, rng), v = random_unit(F, M, rng);
            EXPECT_TRUE(log_unit(u * v).congruent(log_unit(u) + log_unit(v)));
        }
    }
}

TEST(Unramified, BranchRoot) {
    const auto& F1 = UnramifiedField::get(5, 1);
    UnramifiedElement minus_one = UnramifiedElement::from_int(F1, 10, -1);
    EXPECT_TRUE(branch_root(minus_one, 3).congruent(minus_one));
    const auto& F = UnramifiedField::get(3, 2);
    UnramifiedElement w = UnramifiedElement::generator(F, 15);
    UnramifiedElement r = branch_root(w, 1);
    EXPECT_TRUE(r.pow(3).congruent(w));
    for (int n = 0; n < 5; ++n) {
        EXPECT_TRUE(branch_root(w, n + 2).congruent(branch_root(w, n)));
        EXPECT_TRUE(branch_root(w, n + 1).pow(3).congruent(branch_root(w, n)));
    }
    EXPECT_THROW(branch_root(UnramifiedElement::from_int(F, 15, 4), 1), std::domain_error);
}
