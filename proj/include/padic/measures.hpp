#pragma once

#include <optional>
#include <vector>

#include "padic/bernoulli.hpp"
#include "padic/series.hpp"

namespace padic {

enum class MeasureKind { koblitz, bernoulli, generic };
enum class MomentDomain { Zp, Zp_units };

// O_F-valued measure on Z_p, carried by its Amice series sum_a mu(a + p^n Z_p) (1+T)^a.
// Koblitz and Bernoulli measures also keep their parameters so that partial values and
// moments can use closed forms.
class PMeasure {
public:
    static PMeasure generic(IwasawaSeries amice, bool units_only = false);

    const IwasawaSeries& amice() const { return amice_; }
    MeasureKind kind() const { return kind_; }
    bool units_only() const { return units_only_; }
    const UnramifiedField& field() const { return amice_.proto().field(); }
    u64 prime() const { return field().prime(); }
    int prec() const { return prec_; }
    // Koblitz parameter; only for kind() == koblitz.
    const UnramifiedElement& z() const { return z_; }
    // Bernoulli parameter; only for kind() == bernoulli.
    i64 c() const { return c_; }

private:
    friend PMeasure koblitz_measure(const UnramifiedElement& z, std::size_t n_terms);
    friend PMeasure bernoulli_measure(const UnramifiedField& F, int prec, i64 c, std::size_t n_terms);
    friend PMeasure restrict_units(const PMeasure& mu);

    IwasawaSeries amice_;
    MeasureKind kind_ = MeasureKind::generic;
    bool units_only_ = false;
    int prec_ = 0;
    UnramifiedElement z_;
    i64 c_ = 0;
};

// mu_z with mu_z(a + p^n Z_p) = z^a / (1 - z^{p^n}) for 0 <= a < p^n; amice = 1/(1 - z(1+T)).
// z must be a root of unity of order prime to p, z != 1.
PMeasure koblitz_measure(const UnramifiedElement& z, std::size_t n_terms);
// E_c with E_c(a + p^n Z_p) = B_1({a/p^n}) - c B_1({c' a/p^n}), c c' = 1 mod p^n;
// amice = 1/T - c/((1+T)^c - 1).
PMeasure bernoulli_measure(const UnramifiedField& F, int prec, i64 c, std::size_t n_terms);
// mu restricted to Z_p^x.
PMeasure restrict_units(const PMeasure& mu);

// mu(a + p^n Z_p), 0 <= a < p^n. Closed forms for Koblitz and Bernoulli measures, the
// averaging formula (1/p^n) sum_zeta zeta^{-a} amice(zeta - 1) otherwise.
UnramifiedElement partial_value(const PMeasure& mu, u64 a, int n);
// The averaging formula on an arbitrary series, computed in the cyclotomic rings.
UnramifiedElement partial_value_from_series(const IwasawaSeries& f, u64 a, int n);
// Image of f in O_F[u]/(u^{p^n} - 1), u = 1 + T: entry a is mu(a + p^n Z_p).
std::vector<UnramifiedElement> level_reduction(const IwasawaSeries& f, int n);
// sum_a v[a] (1+T)^a truncated to n_terms.
IwasawaSeries series_from_level(const std::vector<UnramifiedElement>& v, std::size_t n_terms);

// Exact Bernoulli-distribution value E_{k,c}(a + p^n Z_p) = E_k(U) - c^k E_k(c^{-1} U),
// E_k(b + p^n Z_p) = p^{n(k-1)} B_k({b/p^n}) / k. It equals the integral of x^{k-1} dE_{1,c}
// over the ball.
Rational bernoulli_ball_value(u64 p, i64 c, int k, u64 a, int n);

// int x^k dmu over the domain. For k >= 0 the value is D^k(amice)(0) (exact). For k < 0 the
// domain must be the units; the value is a Taylor-corrected Riemann sum at the given level
// (closed-form ball moments for Koblitz and Bernoulli measures, plain sums otherwise),
// cross-checked against level + 1. Throws PrecisionError if the two levels disagree.
UnramifiedElement moment(const PMeasure& mu, i64 k, MomentDomain domain, int level);

}  // namespace padic
