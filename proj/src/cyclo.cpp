#include "padic/cyclo.hpp"

#include <algorithm>

namespace padic {

std::size_t euler_phi_pn(u64 p, int n) {
    return n == 0 ? 1 : static_cast<std::size_t>((p - 1) * pow_u64(p, n - 1));
}

CycloElement::CycloElement(const UnramifiedField& F, int level, int prec)
    : F_(&F), level_(level), prec_(prec), c_(euler_phi_pn(F.prime(), level), UnramifiedElement(F, prec)) {
    if (level < 0) throw std::invalid_argument("CycloElement: negative level");
}

CycloElement CycloElement::from_base(const UnramifiedElement& x, int level) {
    CycloElement r(x.field(), level, x.prec());
    r.c_[0] = x;
    return r;
}

CycloElement CycloElement::zeta_power(const UnramifiedField& F, int level, int prec, i64 j) {
    const u64 pn = pow_u64(F.prime(), level);
    std::vector<UnramifiedElement> v(pn, UnramifiedElement(F, prec));
    v[reduce_signed(j, pn)] = UnramifiedElement::from_int(F, prec, 1);
    CycloElement r(F, level, prec);
    r.c_ = fold(std::move(v), level, r.phi());
    return r;
}

CycloElement CycloElement::from_coeffs(std::vector<UnramifiedElement> coeffs, int level) {
    if (coeffs.empty()) throw std::invalid_argument("CycloElement: empty coefficient vector");
    const UnramifiedField& F = coeffs[0].field();
    int prec = coeffs[0].prec();
    for (const auto& x : coeffs) prec = std::min(prec, x.prec());
    CycloElement r(F, level, prec);
    r.c_ = fold(std::move(coeffs), level, r.phi());
    for (auto& x : r.c_) x = x.lowered_to(prec);
    return r;
}

std::vector<UnramifiedElement> CycloElement::fold(std::vector<UnramifiedElement> v, int level, std::size_t phi) {
    if (v.empty()) return v;
    const UnramifiedElement zero = v[0].zero_like();
    if (level == 0) {
        UnramifiedElement s = zero;
        for (const auto& x : v) s += x;
        return {s};
    }
    const u64 p = zero.prime();
    const std::size_t pn = pow_u64(p, level), step = pow_u64(p, level - 1);
    // u^{p^n} = 1
    for (std::size_t k = v.size(); k-- > pn;) {
        v[k % pn] += v[k];
    }
    v.resize(std::min(v.size(), pn), zero);
    // u^{phi} = -sum_{j=0}^{p-2} u^{j p^{n-1}}, applied from the top down
    for (std::size_t k = v.size(); k-- > phi;) {
        if (v[k].is_zero()) continue;
        UnramifiedElement c = v[k];
        for (std::size_t j = 0; j + 1 < p; ++j) v[k - phi + j * step] -= c;
    }
    v.resize(phi, zero);
    return v;
}

CycloElement CycloElement::one_like() const {
    return from_base(UnramifiedElement::from_int(*F_, prec_, 1), level_);
}

bool CycloElement::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

int CycloElement::valuation() const {
    int v = prec_;
    for (const auto& x : c_) v = std::min(v, x.valuation());
    return v;
}

bool CycloElement::in_base() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

CycloElement CycloElement::with_prec(int prec) const {
    CycloElement r = *this;
    r.prec_ = prec;
    for (auto& x : r.c_) x = x.with_prec(prec);
    return r;
}

CycloElement CycloElement::divide_by_p(int k) const {
    CycloElement r = *this;
    r.prec_ = prec_ - k;
    for (auto& x : r.c_) x = x.divide_by_p(k);
    return r;
}

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

static void check_compatible(const CycloElement& a, const CycloElement& b) {
    if (&a.field() != &b.field() || a.level() != b.level())
        throw std::invalid_argument("CycloElement: incompatible operands");
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
    check_compatible(*this, o);
    prec_ = std::min(prec_, o.prec_);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
    check_compatible(*this, o);
    prec_ = std::min(prec_, o.prec_);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    check_compatible(a, b);
    int prec = std::min(a.prec_, b.prec_);
    std::size_t n = 2 * a.phi() - 1;
    std::vector<UnramifiedElement> prod = series_mul(a.c_, b.c_, n, UnramifiedElement(*a.F_, prec));
    CycloElement r(*a.F_, a.level_, prec);
    r.c_ = CycloElement::fold(std::move(prod), a.level_, a.phi());
    return r;
}

CycloElement operator*(CycloElement a, const UnramifiedElement& s) {
    for (auto& x : a.c_) x = x * s;
    a.prec_ = std::min(a.prec_, s.prec());
    return a;
}

CycloElement operator*(CycloElement a, i64 k) {
    for (auto& x : a.c_) x = x * k;
    return a;
}

CycloElement CycloElement::pow(u64 e) const {
    CycloElement r = one_like();
    CycloElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

CycloElement CycloElement::inverse() const {
    // Newton iteration from the inverse of the residue x(1); converges (zeta - 1)-adically.
    UnramifiedElement s = c_[0].zero_like();
    for (const auto& x : c_) s += x;
    if (!s.is_unit()) throw std::domain_error("CycloElement: inverse of a non-unit");
    CycloElement y = from_base(s.inverse(), level_);
    const CycloElement one = one_like();
    for (int it = 0; it < 64; ++it) {
        CycloElement e = one - *this * y;
        if (e.is_zero()) return y;
        y = y + y * e;
    }
    throw std::logic_error("CycloElement: inverse did not converge");
}

CycloElement CycloElement::galois(i64 a) const {
    if (level_ == 0) return *this;
    const u64 p = prime();
    if (reduce_signed(a, p) == 0) throw std::domain_error("CycloElement: galois exponent must be prime to p");
    const u64 pn = pow_u64(p, level_);
    u64 ar = reduce_signed(a, pn);
    std::vector<UnramifiedElement> v(pn, UnramifiedElement(*F_, prec_));
    for (std::size_t j = 0; j < c_.size(); ++j) v[mulmod(j, ar, pn)] += c_[j];
    CycloElement r(*F_, level_, prec_);
    r.c_ = fold(std::move(v), level_, phi());
    return r;
}

CycloElement CycloElement::frobenius(i64 k) const {
    CycloElement r = *this;
    for (auto& x : r.c_) x = frobenius_power(x, k);
    return r;
}

UnramifiedElement CycloElement::trace_to_base() const {
    if (level_ == 0) return c_[0];
    const u64 p = prime();
    const std::size_t step = pow_u64(p, level_ - 1);
    UnramifiedElement t = c_[0] * static_cast<i64>(phi());
    for (std::size_t j = step; j < c_.size(); j += step) t -= c_[j] * static_cast<i64>(step);
    return t;
}

bool CycloElement::congruent(const CycloElement& o, int k) const {
    if (&o.field() != F_ || o.level_ != level_) return false;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].congruent(o.c_[j], k)) return false;
    return true;
}

CycloElement eval_series(const IwasawaSeries& f, int n) {
    const UnramifiedField& F = f.proto().field();
    const std::size_t phi = euler_phi_pn(F.prime(), n);
    int prec = f.prec();
    if (n == 0) return CycloElement::from_base(f.coeff(0).lowered_to(prec), 0);
    bool certified = f.level_certificate && *f.level_certificate >= n;
    if (!certified) prec = std::min<int>(prec, static_cast<int>(f.size() / phi));
    if (prec <= 0)
        throw PrecisionError("eval_series: truncation too short for level " + std::to_string(n) + ", need at least " +
                             std::to_string(phi) + " terms per digit");
    // Horner in u - 1, working on a length-(phi + 1) buffer folded after each step.
    const UnramifiedElement zero(F, prec);
    const u64 p = F.prime();
    const std::size_t step = pow_u64(p, n - 1);
    std::vector<UnramifiedElement> r(phi, zero), next(phi + 1, zero);
    for (std::size_t k = f.size(); k-- > 0;) {
        std::fill(next.begin(), next.end(), zero);
        for (std::size_t j = 0; j < phi; ++j) {
            if (r[j].is_zero()) continue;
            next[j + 1] += r[j];
            next[j] -= r[j];
        }
        next[0] += f[k].lowered_to(prec);
        if (!next[phi].is_zero()) {
            UnramifiedElement c = next[phi];
            for (std::size_t j = 0; j + 1 < p; ++j) next[j * step] -= c;
        }
        std::copy(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(phi), r.begin());
    }
    return CycloElement::from_coeffs(std::move(r), n);
}

UnramifiedElement int_n(const IwasawaSeries& f, int n) {
    UnramifiedElement s = eval_series(f, 0).trace_to_base();
    for (int k = 1; k <= n; ++k) s += eval_series(f, k).trace_to_base();
    if (s.prec() < n) throw PrecisionError("int_n: raw sum known to fewer than n digits");
    int v = s.valuation();
    if (v < n)
        throw std::domain_error("int_n: sum over mu_{p^n} not divisible by p^n (valuation " + std::to_string(v) + ")");
    return s.divide_by_p(n);
}

}  // namespace padic
