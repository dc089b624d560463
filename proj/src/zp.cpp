#include "padic/zp.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

bool is_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (u64 q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

int max_precision(u64 p) {
    int k = 0;
    u128 v = 1;
    while (v * p < (static_cast<u128>(1) << 62)) {
        v *= p;
        ++k;
    }
    return k;
}

u64 pow_u64(u64 p, int k) {
    if (k < 0) throw std::invalid_argument("pow_u64: negative exponent");
    u64 r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    if (m == 1) return 0;
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: not a unit");
    return reduce_signed(t, m);
}

u64 reduce_signed(i64 x, u64 m) {
    if (x >= 0) return static_cast<u64>(x) % m;
    u64 r = static_cast<u64>(-(x + 1)) % m;  // avoids overflow at INT64_MIN
    return m - 1 - r;
}

int valuation(i64 x, u64 p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    while (x % static_cast<i64>(p) == 0) {
        x /= static_cast<i64>(p);
        ++v;
    }
    return v;
}

PadicInt::PadicInt(u64 p, int prec, u64 residue) : p_(p), prec_(prec) {
    if (prec < 0 || prec > max_precision(p)) throw PrecisionError("PadicInt: precision out of range");
    r_ = residue % pow_u64(p, prec);
}

PadicInt PadicInt::from_int(u64 p, int prec, i64 x) {
    return PadicInt(p, prec, reduce_signed(x, pow_u64(p, prec)));
}

PadicInt PadicInt::from_fraction(u64 p, int prec, i64 num, i64 den) {
    u64 m = pow_u64(p, prec);
    return PadicInt(p, prec, mulmod(reduce_signed(num, m), invmod(reduce_signed(den, m), m), m));
}

int PadicInt::valuation() const {
    if (r_ == 0) return prec_;
    int v = 0;
    u64 x = r_;
    while (x % p_ == 0) {
        x /= p_;
        ++v;
    }
    return v;
}

PadicInt PadicInt::with_prec(int prec) const {
    if (prec > prec_) throw PrecisionError("PadicInt: cannot raise precision");
    return PadicInt(p_, prec, r_);
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw std::domain_error("PadicInt: inverse of a non-unit");
    u64 m = modulus();
    return PadicInt(p_, prec_, invmod(r_, m));
}

PadicInt PadicInt::divide_by_p(int k) const {
    if (k > prec_) throw PrecisionError("PadicInt: division by p exhausts precision");
    u64 pk = pow_u64(p_, k);
    if (r_ % pk != 0) throw std::domain_error("PadicInt: value not divisible by p^k");
    return PadicInt(p_, prec_ - k, r_ / pk);
}

PadicInt PadicInt::mul_p(int k) const {
    int np = std::min(prec_ + k, max_precision(p_));
    u64 m = pow_u64(p_, np);
    return PadicInt(p_, np, mulmod(r_, pow_u64(p_, std::min(k, np)) % m, m));
}

PadicInt PadicInt::pow(u64 e) const { return PadicInt(p_, prec_, powmod(r_, e, modulus())); }

i64 PadicInt::signed_residue() const {
    u64 m = modulus();
    return r_ > m / 2 ? -static_cast<i64>(m - r_) : static_cast<i64>(r_);
}

std::string PadicInt::to_string() const {
    std::ostringstream os;
    os << r_ << " + O(" << p_ << "^" << prec_ << ")";
    return os.str();
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, prec_, r_ == 0 ? 0 : modulus() - r_); }

static void check_same_prime(u64 a, u64 b) {
    if (a != b) throw std::invalid_argument("PadicInt: mixed primes");
}

PadicInt& PadicInt::operator+=(const PadicInt& o) {
    check_same_prime(p_, o.p_);
    prec_ = std::min(prec_, o.prec_);
    u64 m = modulus();
    r_ = addmod(r_ % m, o.r_ % m, m);
    return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) {
    check_same_prime(p_, o.p_);
    prec_ = std::min(prec_, o.prec_);
    u64 m = modulus();
    r_ = submod(r_ % m, o.r_ % m, m);
    return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& o) {
    check_same_prime(p_, o.p_);
    // A product of x (mod p^a) and y (mod p^b) is known mod p^{min(a + v(y), b + v(x))}.
    int np = std::min(prec_ + o.valuation(), o.prec_ + valuation());
    np = std::min(np, max_precision(p_));
    np = std::max(np, std::min(prec_, o.prec_));
    u64 m = pow_u64(p_, np);
    r_ = mulmod(r_, o.r_, m);
    prec_ = np;
    return *this;
}

bool PadicInt::congruent(const PadicInt& o) const {
    int k = std::min(prec_, o.prec_);
    u64 m = pow_u64(p_, k);
    return p_ == o.p_ && r_ % m == o.r_ % m;
}

void PadicNumber::normalize() {
    while (shift_ > 0 && num_.prec() > 0 && !num_.is_zero() && num_.residue() % num_.prime() == 0) {
        num_ = num_.divide_by_p(1);
        --shift_;
    }
}

PadicInt PadicNumber::to_integral() const {
    if (shift_ <= 0) return num_.mul_p(-shift_);
    if (!is_integral()) throw std::domain_error("PadicNumber: value is not integral");
    if (num_.is_zero()) return PadicInt::zero(num_.prime(), std::max(0, num_.prec() - shift_));
    return num_.divide_by_p(shift_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    int s = std::max(a.shift_, b.shift_);
    PadicInt x = a.num_.mul_p(s - a.shift_);
    PadicInt y = b.num_.mul_p(s - b.shift_);
    return PadicNumber(x + y, s);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    return PadicNumber(a.num_ * b.num_, a.shift_ + b.shift_);
}

PadicNumber PadicNumber::divided_by(const PadicInt& d) const {
    int v = d.valuation();
    if (v >= d.prec()) throw PrecisionError("PadicNumber: division by a value that is zero to precision");
    PadicInt unit = v > 0 ? d.divide_by_p(v) : d;
    PadicInt q = num_.with_prec(std::min(num_.prec(), unit.prec())) * unit.inverse();
    return PadicNumber(q, shift_ + v);
}

bool PadicNumber::agree(const PadicNumber& a, const PadicNumber& b, int k) {
    PadicNumber d = a - b;
    if (d.abs_prec() < k) return false;
    return d.num_.valuation() - d.shift_ >= k;
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    os << num_.residue();
    if (shift_ != 0) os << " * " << num_.prime() << "^" << -shift_;
    os << " + O(" << num_.prime() << "^" << abs_prec() << ")";
    return os.str();
}

}  // namespace padic
