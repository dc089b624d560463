#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "padic/zp.hpp"

namespace padic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact Bernoulli numbers B_0..B_K (B_1 = -1/2) and the polynomials B_n(X).
class BernoulliTable {
public:
    explicit BernoulliTable(int K);
    // Shared table with K = 32.
    static const BernoulliTable& shared();

    int max_index() const { return static_cast<int>(b_.size()) - 1; }
    const Rational& number(int n) const;
    // Coefficients of B_n(X), index = power of X.
    const std::vector<Rational>& poly(int n) const;
    Rational eval(int n, const Rational& x) const;

private:
    std::vector<Rational> b_;
    std::vector<std::vector<Rational>> poly_;
};

BigInt binomial(int n, int k);
// Fractional part in [0, 1).
Rational frac(const Rational& x);
int valuation(const BigInt& x, u64 p);
// x as unit * p^v with the unit known to prec digits.
PadicNumber to_padic(const Rational& x, u64 p, int prec);
// Requires a p-integral rational.
PadicInt to_padic_int(const Rational& x, u64 p, int prec);

}  // namespace padic
