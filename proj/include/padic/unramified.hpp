#pragma once

#include <array>
#include <string>
#include <vector>

#include "padic/zp.hpp"

namespace padic {

inline constexpr int kMaxDegree = 6;

// Structure constants of O_F = Z_p[w] for F/Q_p unramified of degree d, with w a
// Teichmueller generator of mu_{q-1}. Everything is stored mod p^W, W = max_precision(p).
// Instances are built once per (p, d) and never destroyed.
class UnramifiedField {
public:
    static const UnramifiedField& get(u64 p, int d);

    u64 prime() const { return p_; }
    int degree() const { return d_; }
    int capacity() const { return cap_; }
    u64 q() const { return q_; }
    // Monic minimal polynomial of w: w^d = -sum_{i<d} min_poly()[i] w^i.
    const std::vector<u64>& min_poly() const { return h_; }
    // Irreducible polynomial over F_p whose Teichmueller root is w.
    const std::vector<u64>& residue_poly() const { return hbar_; }

    // Internal tables, public for the element implementation.
    u64 big_modulus() const { return mod_; }
    const std::vector<std::array<u64, kMaxDegree>>& reduction_table() const { return red_; }
    const std::array<std::array<u64, kMaxDegree>, kMaxDegree>& frobenius_matrix() const { return frob_; }
    const std::array<std::array<u64, kMaxDegree>, kMaxDegree>& frobenius_inverse_matrix() const { return frob_inv_; }
    const std::array<u64, kMaxDegree>& basis_traces() const { return tr_; }

private:
    UnramifiedField(u64 p, int d);
    u64 p_;
    int d_;
    int cap_;
    u64 q_;
    u64 mod_;
    std::vector<u64> hbar_;
    std::vector<u64> h_;
    std::vector<std::array<u64, kMaxDegree>> red_;  // w^{d+k} in coordinates, k = 0..d-2
    std::array<std::array<u64, kMaxDegree>, kMaxDegree> frob_{};      // [row][col], column j = sigma(w^j)
    std::array<std::array<u64, kMaxDegree>, kMaxDegree> frob_inv_{};
    std::array<u64, kMaxDegree> tr_{};
};

// Element of O_F known modulo p^prec, in coordinates on {1, w, ..., w^{d-1}}.
class UnramifiedElement {
public:
    UnramifiedElement() = default;
    UnramifiedElement(const UnramifiedField& F, int prec);  // zero

    static UnramifiedElement from_int(const UnramifiedField& F, int prec, i64 x);
    static UnramifiedElement from_padic(const UnramifiedField& F, const PadicInt& x);
    static UnramifiedElement from_coords(const UnramifiedField& F, int prec, const std::vector<i64>& coords);
    // The Teichmueller generator w.
    static UnramifiedElement generator(const UnramifiedField& F, int prec);

    const UnramifiedField& field() const { return *F_; }
    u64 prime() const { return F_->prime(); }
    int degree() const { return F_->degree(); }
    int prec() const { return prec_; }
    u64 modulus() const { return pow_u64(F_->prime(), prec_); }
    u64 coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::vector<u64> coords() const;

    UnramifiedElement zero_like() const { return UnramifiedElement(*F_, prec_); }
    UnramifiedElement one_like() const { return from_int(*F_, prec_, 1); }

    bool is_zero() const;
    // min over coordinates, capped at prec().
    int valuation() const;
    bool is_unit() const { return prec_ > 0 && valuation() == 0; }
    // True when every coordinate above the constant one vanishes.
    bool in_base() const;
    PadicInt base_part() const;

    UnramifiedElement with_prec(int prec) const;
    UnramifiedElement lowered_to(int prec) const { return prec < prec_ ? with_prec(prec) : *this; }
    UnramifiedElement inverse() const;
    UnramifiedElement pow(u64 e) const;
    UnramifiedElement divide_by_p(int k) const;
    UnramifiedElement mul_p(int k) const;

    UnramifiedElement operator-() const;
    UnramifiedElement& operator+=(const UnramifiedElement& o);
    UnramifiedElement& operator-=(const UnramifiedElement& o);
    UnramifiedElement& operator*=(const UnramifiedElement& o);
    UnramifiedElement& operator*=(i64 k);
    UnramifiedElement& operator*=(const PadicInt& k);
    friend UnramifiedElement operator+(UnramifiedElement a, const UnramifiedElement& b) { return a += b; }
    friend UnramifiedElement operator-(UnramifiedElement a, const UnramifiedElement& b) { return a -= b; }
    friend UnramifiedElement operator*(UnramifiedElement a, const UnramifiedElement& b) { return a *= b; }
    friend UnramifiedElement operator*(UnramifiedElement a, i64 k) { return a *= k; }
    friend UnramifiedElement operator*(UnramifiedElement a, const PadicInt& k) { return a *= k; }

    // Equality modulo p^k where k = min of the two precisions.
    bool congruent(const UnramifiedElement& o) const;
    // Equality modulo p^k.
    bool congruent(const UnramifiedElement& o, int k) const;
    std::string to_string() const;

private:
    const UnramifiedField* F_ = nullptr;
    int prec_ = 0;
    std::array<u64, kMaxDegree> c_{};
    friend UnramifiedElement frobenius(const UnramifiedElement&);
    friend UnramifiedElement frobenius_inverse(const UnramifiedElement&);
    friend PadicInt trace_to_qp(const UnramifiedElement&);
};

// Teichmueller lift of the residue class with coordinates `residue` (mod p) on {1, w, ...}.
UnramifiedElement teichmuller(const UnramifiedField& F, const std::vector<i64>& residue, int prec);
UnramifiedElement frobenius(const UnramifiedElement& x);
UnramifiedElement frobenius_inverse(const UnramifiedElement& x);
// sigma_F^k for any integer k.
UnramifiedElement frobenius_power(const UnramifiedElement& x, i64 k);
PadicInt trace_to_qp(const UnramifiedElement& x);
// True when x^{q-1} = 1 to the precision of x.
bool is_teichmuller(const UnramifiedElement& x);
// Iwasawa logarithm: log(u^{q-1})/(q-1). No digits are lost.
UnramifiedElement log_unit(const UnramifiedElement& u);
// log(1 + x) for x in p O_F. No digits are lost.
UnramifiedElement log_one_plus(const UnramifiedElement& x);
// z^{1/p^n} = sigma_F^{-n}(z) for z in mu_{q-1}.
UnramifiedElement branch_root(const UnramifiedElement& z, i64 n);

}  // namespace padic
