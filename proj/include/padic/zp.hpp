#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Raised when a computation cannot deliver the requested number of p-adic digits.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_odd_prime(u64 p);

// Largest W with p^W < 2^62; residues mod p^W fit comfortably in a u64.
int max_precision(u64 p);

// p^k, requires k <= max_precision(p).
u64 pow_u64(u64 p, int k);

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }
inline u64 addmod(u64 a, u64 b, u64 m) { u64 s = a + b; return s >= m ? s - m : s; }
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
u64 powmod(u64 a, u64 e, u64 m);
// Inverse of a unit a modulo m (gcd(a, m) = 1).
u64 invmod(u64 a, u64 m);
// x mod m for signed x.
u64 reduce_signed(i64 x, u64 m);
// p-adic valuation of a nonzero integer.
int valuation(i64 x, u64 p);

// Element of Z_p known modulo p^prec.
class PadicInt {
public:
    PadicInt() = default;
    PadicInt(u64 p, int prec, u64 residue);

    static PadicInt from_int(u64 p, int prec, i64 x);
    // num/den with p not dividing den.
    static PadicInt from_fraction(u64 p, int prec, i64 num, i64 den);
    static PadicInt zero(u64 p, int prec) { return PadicInt(p, prec, 0); }
    static PadicInt one(u64 p, int prec) { return PadicInt(p, prec, 1); }

    u64 prime() const { return p_; }
    int prec() const { return prec_; }
    u64 residue() const { return r_; }
    u64 modulus() const { return pow_u64(p_, prec_); }

    // Valuation, capped at prec() for values that are zero to precision.
    int valuation() const;
    bool is_zero() const { return r_ == 0; }
    bool is_unit() const { return prec_ > 0 && r_ % p_ != 0; }

    PadicInt with_prec(int prec) const;
    PadicInt inverse() const;
    // Exact division by p^k; the value must be divisible. Precision drops by k.
    PadicInt divide_by_p(int k) const;
    PadicInt mul_p(int k) const;
    PadicInt pow(u64 e) const;

    // Symmetric representative in (-p^prec/2, p^prec/2].
    i64 signed_residue() const;
    std::string to_string() const;

    PadicInt operator-() const;
    PadicInt& operator+=(const PadicInt& o);
    PadicInt& operator-=(const PadicInt& o);
    PadicInt& operator*=(const PadicInt& o);
    friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
    friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
    friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }
    // Equality as elements of Z/p^min(prec).
    bool congruent(const PadicInt& o) const;
    bool operator==(const PadicInt& o) const = default;

private:
    u64 p_ = 3;
    int prec_ = 0;
    u64 r_ = 0;
};

// Element of Q_p written as unit_part * p^{-shift}, with unit_part a PadicInt.
// Used for values whose denominators carry powers of p (L-values, (m-1)! divisions).
class PadicNumber {
public:
    PadicNumber() = default;
    PadicNumber(PadicInt numerator, int shift) : num_(numerator), shift_(shift) { normalize(); }
    static PadicNumber integral(const PadicInt& x) { return PadicNumber(x, 0); }

    const PadicInt& numerator() const { return num_; }
    int shift() const { return shift_; }
    u64 prime() const { return num_.prime(); }
    // Absolute precision: the value is known modulo p^{abs_prec()}.
    int abs_prec() const { return num_.prec() - shift_; }
    int valuation() const { return num_.valuation() - shift_; }
    bool is_integral() const { return shift_ <= 0 || num_.valuation() >= shift_; }
    // The value as an element of Z_p; requires is_integral().
    PadicInt to_integral() const;

    PadicNumber operator-() const { return PadicNumber(-num_, shift_); }
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    // Division by a unit or by p^k times a unit.
    PadicNumber divided_by(const PadicInt& d) const;
    // True when a and b agree modulo p^k (k in absolute terms).
    static bool agree(const PadicNumber& a, const PadicNumber& b, int k);
    std::string to_string() const;

private:
    void normalize();
    PadicInt num_;
    int shift_ = 0;
};

}  // namespace padic
