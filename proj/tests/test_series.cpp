#include <gtest/gtest.h>

#include <random>

#include "padic/series.hpp"

using namespace padic;

namespace {

bool series_congruent(const IwasawaSeries& a, const IwasawaSeries& b, int prec, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        if (!a.coeff(k).congruent(b.coeff(k), prec)) return false;
    return true;
}

IwasawaSeries random_series(const UnramifiedField& F, int prec, std::size_t n, std::mt19937_64& rng) {
    IwasawaSeries r = IwasawaSeries::zero(UnramifiedElement(F, prec), n);
    u64 m = pow_u64(F.prime(), prec);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<i64> c(static_cast<std::size_t>(F.degree()));
        for (auto& x : c) x = static_cast<i64>(rng() % m);
        r[k] = UnramifiedElement::from_coords(F, prec, c);
    }
    return r;
}

// Naive schoolbook product through element arithmetic.
IwasawaSeries naive_mul(const IwasawaSeries& a, const IwasawaSeries& b) {
    std::size_t n = std::min(a.size(), b.size());
    IwasawaSeries r = IwasawaSeries::zero(a.proto(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

TEST(Series, KernelMatchesNaiveProduct) {
    std::mt19937_64 rng(1);
    for (auto [p, d] : {std::pair<u64, int>{3, 1}, {5, 2}, {7, 3}}) {
        const auto& F = UnramifiedField::get(p, d);
        for (int prec : {3, F.capacity()}) {
            IwasawaSeries a = random_series(F, prec, 40, rng), b = random_series(F, prec, 40, rng);
            EXPECT_TRUE(series_congruent(a * b, naive_mul(a, b), prec, 40));
        }
    }
}

TEST(Series, InverseAndPower) {
    std::mt19937_64 rng(2);
    const auto& F = UnramifiedField::get(5, 2);
    IwasawaSeries a = random_series(F, 12, 30, rng);
    a[0] = UnramifiedElement::from_int(F, 12, 7);
    IwasawaSeries one = IwasawaSeries::one(a.proto(), 30);
    EXPECT_TRUE(series_congruent(a * a.inverse(), one, 12, 30));
    EXPECT_TRUE(series_congruent(a.pow(3), a * a * a, 12, 30));
}

TEST(Series, BinomialPowers) {
    const auto& F = UnramifiedField::get(3, 1);
    const int M = 15;
    const std::size_t N = 30;
    IwasawaSeries t1 = IwasawaSeries::one_plus_t(UnramifiedElement(F, M), N);
    EXPECT_TRUE(series_congruent(one_plus_t_pow(F, M, N, 1), t1, M, N));
    EXPECT_TRUE(series_congruent(one_plus_t_pow(F, M, N, 3), t1 * t1 * t1, M, N));
    EXPECT_TRUE(series_congruent(one_plus_t_pow(F, M, N, -2), (t1 * t1).inverse(), M, N));
    // (1+T)^{1/2} squares back to 1+T
    PadicInt half = PadicInt::from_fraction(3, F.capacity(), 1, 2);
    IwasawaSeries s = one_plus_t_pow(F, M, N, half);
    EXPECT_TRUE(series_congruent(s * s, t1, M, N));
}

TEST(Series, SigmaAction) {
    const auto& F = UnramifiedField::get(5, 1);
    const int M = 10;
    const std::size_t N = 20;
    std::mt19937_64 rng(4);
    IwasawaSeries f = random_series(F, M, N, rng);
    EXPECT_TRUE(series_congruent(sigma_a(f, 1), f, M, N));
    EXPECT_TRUE(series_congruent(sigma_a(sigma_a(f, 2), 3), sigma_a(f, 6), M, N));
    EXPECT_TRUE(series_congruent(sigma_a(sigma_a(f, -1), 7), sigma_a(f, -7), M, N));
    PadicInt half = PadicInt::from_fraction(5, F.capacity(), 1, 2);
    EXPECT_TRUE(series_congruent(sigma_a(sigma_a(f, half), 2), f, M, N));
    // sigma_c 1/(1 - z(1+T)) = 1/(1 - z(1+T)^c)
    UnramifiedElement z = teichmuller(F, {2}, M);
    IwasawaSeries one = IwasawaSeries::one(z, N);
    IwasawaSeries Fz = (one - IwasawaSeries::one_plus_t(z, N) * z).inverse();
    for (i64 c : {2, 3, -4}) {
        IwasawaSeries expect = (one - one_plus_t_pow(F, M, N, c) * z).inverse();
        EXPECT_TRUE(series_congruent(sigma_a(Fz, c), expect, M, N));
    }
    EXPECT_THROW(sigma_a(f, 10), std::domain_error);
}

TEST(Series, PMap) {
    const auto& F = UnramifiedField::get(3, 2);
    const int M = 10;
    const std::size_t N = 25;
    IwasawaSeries t = series_t(F, M, N);
    IwasawaSeries expect = one_plus_t_pow(F, M, N, 3) - IwasawaSeries::one(t.proto(), N);
    EXPECT_TRUE(series_congruent(pmap(t), expect, M, N));
    IwasawaSeries one = IwasawaSeries::one(t.proto(), N);
    EXPECT_TRUE(series_congruent(pmap(one), one, M, N));
    UnramifiedElement z = UnramifiedElement::generator(F, M);
    IwasawaSeries Fz = (one - IwasawaSeries::one_plus_t(z, N) * z).inverse();
    IwasawaSeries expect2 = (one - one_plus_t_pow(F, M, N, 3) * z).inverse();
    EXPECT_TRUE(series_congruent(pmap(Fz), expect2, M, N));
    std::mt19937_64 rng(9);
    IwasawaSeries a = random_series(F, M, N, rng), b = random_series(F, M, N, rng);
    EXPECT_TRUE(series_congruent(pmap(a * b), pmap(a) * pmap(b), M, N));
}

TEST(Series, DifferentialOperator) {
    const auto& F = UnramifiedField::get(3, 1);
    const int M = 10;
    const std::size_t N = 20;
    IwasawaSeries t = series_t(F, M, N);
    EXPECT_TRUE(series_congruent(diff_D(t), IwasawaSeries::one_plus_t(t.proto(), N), M, N - 1));
    for (i64 a : {2, 5, -7}) {
        IwasawaSeries f = one_plus_t_pow(F, M, N, a);
        EXPECT_TRUE(series_congruent(diff_D(f), f * a, M, N - 1));
    }
    // D is a derivation
    std::mt19937_64 rng(5);
    IwasawaSeries a = random_series(F, M, N, rng), b = random_series(F, M, N, rng);
    EXPECT_TRUE(series_congruent(diff_D(a * b), diff_D(a) * b.truncated(N - 1) + a.truncated(N - 1) * diff_D(b), M, N - 1));
}

TEST(Series, LogarithmIsAHomomorphism) {
    std::mt19937_64 rng(6);
    const auto& F = UnramifiedField::get(5, 2);
    const int M = 12;
    const std::size_t N = 20;
    auto principal = [&]() {
        IwasawaSeries a = random_series(F, M, N, rng);
        for (std::size_t k = 0; k < N; ++k) a[k] = a[k].with_prec(M - 1).mul_p(1);
        a[0] += a[0].one_like();
        return a;
    };
    IwasawaSeries f = principal(), g = principal();
    IwasawaSeries lf = log_series(f), lg = log_series(g), lfg = log_series(f * g);
    EXPECT_EQ(lfg.prec(), M);
    EXPECT_TRUE(series_congruent(lfg, lf + lg, M, N));
    // log(1 + pT) has T-coefficient p
    IwasawaSeries h = series_from_ints(F, M, {1, 5}, N);
    EXPECT_TRUE(log_series(h)[1].congruent(UnramifiedElement::from_int(F, M, 5)));
    EXPECT_TRUE(log_series(h, 1)[1].congruent(UnramifiedElement::from_int(F, M - 1, 1)));
}
