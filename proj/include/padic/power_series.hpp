#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "padic/zp.hpp"

namespace padic {

// Truncated power series sum_{k<N} c_k T^k over a coefficient ring S.
// S needs zero_like(), one_like(), prec(), lowered_to(int), inverse(), ring operators and S * i64.
template <class S>
class PowerSeries {
public:
    PowerSeries() = default;
    PowerSeries(std::vector<S> coeffs, S proto) : c_(std::move(coeffs)), proto_(proto.zero_like()) {}

    static PowerSeries zero(const S& proto, std::size_t n) {
        return PowerSeries(std::vector<S>(n, proto.zero_like()), proto);
    }
    static PowerSeries constant(const S& value, std::size_t n) {
        PowerSeries r = zero(value, n);
        if (n) r.c_[0] = value;
        return r;
    }
    static PowerSeries one(const S& proto, std::size_t n) { return constant(proto.one_like(), n); }
    // 1 + T, truncated.
    static PowerSeries one_plus_t(const S& proto, std::size_t n) {
        PowerSeries r = one(proto, n);
        if (n > 1) r.c_[1] = proto.one_like();
        return r;
    }

    std::size_t size() const { return c_.size(); }
    const S& operator[](std::size_t k) const { return c_[k]; }
    S& operator[](std::size_t k) { return c_[k]; }
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : proto_; }
    const std::vector<S>& coeffs() const { return c_; }
    const S& proto() const { return proto_; }

    // Minimum precision over the coefficients.
    int prec() const {
        int m = proto_.prec();
        for (const auto& x : c_) m = std::min(m, x.prec());
        return c_.empty() ? proto_.prec() : m;
    }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    // Optional level n: the series is only claimed modulo ((1+T)^{p^n} - 1).
    std::optional<int> level_certificate;

    PowerSeries truncated(std::size_t n) const {
        PowerSeries r = *this;
        if (n < r.c_.size()) r.c_.resize(n);
        return r;
    }
    PowerSeries padded(std::size_t n) const {
        PowerSeries r = *this;
        while (r.c_.size() < n) r.c_.push_back(proto_);
        return r;
    }
    PowerSeries lowered_to(int prec) const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x = x.lowered_to(prec);
        r.proto_ = proto_.lowered_to(prec);
        return r;
    }

    PowerSeries operator-() const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    PowerSeries& operator+=(const PowerSeries& o) {
        std::size_t n = std::min(size(), o.size());
        c_.resize(n);
        for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        std::size_t n = std::min(size(), o.size());
        c_.resize(n);
        for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(series_mul(a.c_, b.c_, std::min(a.size(), b.size()), a.proto_), a.proto_);
        return r;
    }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
    friend PowerSeries operator*(PowerSeries a, const S& s) {
        for (auto& x : a.c_) x = x * s;
        return a;
    }
    friend PowerSeries operator*(PowerSeries a, i64 k) {
        for (auto& x : a.c_) x = x * k;
        return a;
    }

    // Multiplicative inverse; the constant term must be a unit.
    PowerSeries inverse() const {
        if (c_.empty()) return *this;
        std::size_t n = size();
        PowerSeries r = zero(proto_, n);
        S inv0 = c_[0].inverse();
        r.c_[0] = inv0;
        // Newton doubling: r <- r (2 - f r).
        std::size_t cur = 1;
        while (cur < n) {
            cur = std::min(2 * cur, n);
            PowerSeries f = truncated(cur);
            PowerSeries rr = r.truncated(cur);
            PowerSeries e = f * rr;
            for (auto& x : e.c_) x = -x;
            e.c_[0] += proto_.one_like() * 2;
            r = (rr * e).padded(n);
        }
        return r.truncated(n);
    }

    PowerSeries pow(u64 e) const {
        PowerSeries r = one(proto_, size());
        PowerSeries b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // f(P(T)) for P(0) = 0, by Horner's rule; truncation min(size, P.size()).
    PowerSeries compose(const PowerSeries& P) const {
        if (!P.c_.empty() && !P.c_[0].is_zero()) throw std::invalid_argument("compose: inner series must vanish at 0");
        std::size_t n = std::min(size(), P.size());
        std::size_t deg = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (!P.c_[k].is_zero()) deg = k;
        PowerSeries inner = P.truncated(std::min(n, deg + 1));
        PowerSeries r = zero(proto_, n);
        for (std::size_t k = n; k-- > 0;) {
            // r <- r * P + f_k, keeping only terms of degree < n
            std::vector<S> next = series_mul(r.c_, inner.c_, n, proto_);
            next[0] += c_[k];
            r.c_ = std::move(next);
        }
        return r;
    }

    // f / T, when f(0) = 0; loses one term of truncation.
    PowerSeries divided_by_t() const {
        if (c_.empty()) return *this;
        if (!c_[0].is_zero()) throw std::domain_error("divided_by_t: constant term is nonzero");
        return PowerSeries(std::vector<S>(c_.begin() + 1, c_.end()), proto_);
    }

    template <class F>
    PowerSeries map(F fn) const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x = fn(x);
        return r;
    }

private:
    std::vector<S> c_;
    S proto_;
};

// Truncated product, first n coefficients. Generic schoolbook version; overloads may specialize.
// Operands shorter than n are treated as zero-padded.
template <class S>
std::vector<S> series_mul(const std::vector<S>& a, const std::vector<S>& b, std::size_t n, const S& proto) {
    std::vector<S> r(n, proto.zero_like());
    std::size_t bn = std::min(b.size(), n);
    for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < bn && i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace padic
