#pragma once

#include <vector>

#include "padic/bernoulli.hpp"
#include "padic/measures.hpp"

namespace padic {

// Li_m^{(p)} is evaluated either at a root of unity z != 1 or, by convention, at z = 1 where it
// stands for L_p(m, omega^{1-m}). The caller states which one it means.
enum class PolylogPoint { root_of_unity, one };

// Kubota-Leopoldt value L_p(m, omega^{1-m}) = moment(E_c, -m, units) / (c^{1-m} - 1), m >= 2.
// prec is the number of digits of the E_c moment; the division by c^{1-m} - 1 costs its valuation.
PadicNumber lp_value(u64 p, int m, i64 c, int prec);
// Default auxiliary integer: the smallest c >= 2 with c^{1-m} != 1 mod p (then no digits are lost),
// falling back to the smallest c >= 2 prime to p.
i64 default_aux_c(u64 p, int m);

// Li_m^{(p)}(z) = int_{Z_p^x} x^{-m} dmu_z. For PolylogPoint::one, z only supplies the field and the
// precision and the result is L_p(m, omega^{1-m}) (must be integral).
UnramifiedElement li_p_star(PolylogPoint point, const UnramifiedElement& z, int m, int level = 3);
// Smallest d >= 1 with z^{p^d} = z.
int frobenius_period(const UnramifiedElement& z);
// Li_m(z) from the cyclic system Li^{(p)}(z_j) = Li(z_j) - p^{-m} Li(z_{j+1}), z_j = z^{p^j}.
UnramifiedElement li_padic(const UnramifiedElement& z, int m, int level = 3);

struct PowerSumWitness {
    BigInt n_m;       // lcm(m + 1, denominators of B_0..B_m)
    BigInt sum;       // sum_{a < p^n, p not dividing a} a^m
    BigInt quotient;  // n_m * sum / p^n
    bool divisible = false;
};
PowerSumWitness power_sum_divisibility(u64 p, int m, int n);
// The same unit power sum through sum_{a<N} a^m = (B_{m+1}(N) - B_{m+1}) / (m + 1).
BigInt power_sum_units_bernoulli(u64 p, int m, int n);

// n! times the X^n coefficient of F(T) - c F((1+T)^c - 1) at T = e^X - 1, where
// F(T) = -1/T + 1/((1+T)^p - 1). Computed over Q from Laurent expansions; n = 0..K-1.
std::vector<Rational> cancelled_pole_moments(u64 p, i64 c, int K);

}  // namespace padic
