#pragma once

#include <vector>

#include "padic/series.hpp"

namespace padic {

// Element of R_n = O_F[zeta_{p^n}] mod p^prec, as a polynomial in u = zeta of degree < phi(p^n).
// Level 0 is O_F itself (u = 1).
class CycloElement {
public:
    CycloElement() = default;
    CycloElement(const UnramifiedField& F, int level, int prec);  // zero

    static CycloElement from_base(const UnramifiedElement& x, int level);
    // zeta^j.
    static CycloElement zeta_power(const UnramifiedField& F, int level, int prec, i64 j);
    static CycloElement from_coeffs(std::vector<UnramifiedElement> coeffs, int level);

    const UnramifiedField& field() const { return *F_; }
    u64 prime() const { return F_->prime(); }
    int level() const { return level_; }
    int prec() const { return prec_; }
    std::size_t phi() const { return c_.size(); }
    const UnramifiedElement& coeff(std::size_t j) const { return c_[j]; }
    const std::vector<UnramifiedElement>& coeffs() const { return c_; }

    CycloElement zero_like() const { return CycloElement(*F_, level_, prec_); }
    CycloElement one_like() const;
    bool is_zero() const;
    int valuation() const;  // p-adic valuation of the coordinates, capped at prec
    bool in_base() const;
    UnramifiedElement base_part() const { return c_[0]; }

    CycloElement with_prec(int prec) const;
    CycloElement lowered_to(int prec) const { return prec < prec_ ? with_prec(prec) : *this; }
    CycloElement divide_by_p(int k) const;
    CycloElement inverse() const;
    CycloElement pow(u64 e) const;

    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& o);
    CycloElement& operator-=(const CycloElement& o);
    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(CycloElement a, const UnramifiedElement& s);
    friend CycloElement operator*(CycloElement a, i64 k);

    // sigma_a: zeta -> zeta^a, a prime to p.
    CycloElement galois(i64 a) const;
    // sigma_F^k on the O_F coefficients.
    CycloElement frobenius(i64 k = 1) const;
    // Trace from R_n down to O_F.
    UnramifiedElement trace_to_base() const;

    bool congruent(const CycloElement& o, int k) const;
    bool congruent(const CycloElement& o) const { return congruent(o, std::min(prec_, o.prec_)); }

private:
    // Reduce a length-(anything) coefficient vector modulo Phi_{p^n} into phi coefficients.
    static std::vector<UnramifiedElement> fold(std::vector<UnramifiedElement> v, int level, std::size_t phi);
    const UnramifiedField* F_ = nullptr;
    int level_ = 0;
    int prec_ = 0;
    std::vector<UnramifiedElement> c_;
};

std::size_t euler_phi_pn(u64 p, int n);

// f(zeta_{p^n} - 1). Precision min(prec f, floor(N / phi(p^n))) unless the series carries a level
// certificate covering n.
CycloElement eval_series(const IwasawaSeries& f, int n);

// (1/p^n) sum_{zeta in mu_{p^n}} f(zeta - 1). The raw sum is checked to be divisible by p^n;
// the result has n fewer digits than the raw sum.
UnramifiedElement int_n(const IwasawaSeries& f, int n);

}  // namespace padic
