#include "padic/unramified.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace padic {

namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a*b mod (monic f, m); a, b of degree < deg f.
Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, u64 m) {
    std::size_t d = f.size() - 1;
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], m), m);
    }
    for (std::size_t k = r.size(); k-- > d;) {
        u64 c = r[k];
        if (c == 0) continue;
        r[k] = 0;
        for (std::size_t j = 0; j < d; ++j) r[k - d + j] = submod(r[k - d + j], mulmod(c, f[j], m), m);
    }
    r.resize(d, 0);
    return r;
}

Poly powmod_poly(Poly a, u64 e, const Poly& f, u64 m) {
    Poly r(f.size() - 1, 0);
    r[0] = 1 % m;
    while (e) {
        if (e & 1) r = mulmod_poly(r, a, f, m);
        a = mulmod_poly(a, a, f, m);
        e >>= 1;
    }
    return r;
}

// Remainder of a by b over F_p (b nonzero, trimmed).
Poly polyrem_fp(Poly a, const Poly& b, u64 p) {
    trim(a);
    u64 inv_lead = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        u64 c = mulmod(a.back(), inv_lead, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = submod(a[shift + j], mulmod(c, b[j], p), p);
        trim(a);
    }
    return a;
}

Poly polygcd_fp(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = polyrem_fp(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
            out.push_back(r);
            while (n % r == 0) n /= r;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Poly x_poly(std::size_t d) {
    Poly x(d, 0);
    if (d == 1) return x;  // caller handles degree one separately
    x[1] = 1;
    return x;
}

bool is_irreducible(const Poly& f, u64 p) {
    std::size_t d = f.size() - 1;
    Poly x = x_poly(d);
    auto frob_pow = [&](std::size_t k) { return powmod_poly(x, pow_u64(p, static_cast<int>(k)), f, p); };
    Poly xq = frob_pow(d);
    if (xq != x) return false;
    for (u64 r : prime_factors(d)) {
        Poly t = frob_pow(d / r);
        t.resize(std::max<std::size_t>(t.size(), 2), 0);
        t[1] = submod(t[1], 1, p);
        if (polygcd_fp(t, f, p).size() != 1) return false;
    }
    return true;
}

bool x_is_primitive(const Poly& f, u64 p) {
    std::size_t d = f.size() - 1;
    u64 q = pow_u64(p, static_cast<int>(d));
    Poly x = x_poly(d);
    Poly one(d, 0);
    one[0] = 1;
    if (powmod_poly(x, q - 1, f, p) != one) return false;
    for (u64 r : prime_factors(q - 1))
        if (powmod_poly(x, (q - 1) / r, f, p) == one) return false;
    return true;
}

u64 primitive_root(u64 p) {
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 r : prime_factors(p - 1))
            if (powmod(g, (p - 1) / r, p) == 1) ok = false;
        if (ok) return g;
    }
    return 1;
}

// First monic primitive polynomial of degree d over F_p, coefficients indexed from the constant term.
Poly find_residue_poly(u64 p, int d) {
    if (d == 1) return {p - primitive_root(p), 1};
    u64 count = pow_u64(p, d);
    for (u64 k = 0; k < count; ++k) {
        Poly f(static_cast<std::size_t>(d) + 1, 0);
        u64 t = k;
        for (int i = 0; i < d; ++i) {
            f[static_cast<std::size_t>(i)] = t % p;
            t /= p;
        }
        f[static_cast<std::size_t>(d)] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible(f, p) && x_is_primitive(f, p)) return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

}  // namespace

UnramifiedField::UnramifiedField(u64 p, int d) : p_(p), d_(d) {
    if (!is_odd_prime(p)) throw std::invalid_argument("UnramifiedField: p must be an odd prime");
    if (d < 1 || d > kMaxDegree) throw std::invalid_argument("UnramifiedField: unsupported degree");
    cap_ = max_precision(p);
    mod_ = pow_u64(p, cap_);
    q_ = pow_u64(p, d);
    hbar_ = find_residue_poly(p, d);

    // Teichmueller lift of a root of hbar inside (Z/p^W)[X]/(hbar), as a fixed point of y -> y^q.
    const std::size_t D = static_cast<std::size_t>(d);
    Poly omega(D, 0);
    if (d == 1) omega[0] = hbar_[0] == 0 ? 0 : p - hbar_[0];
    else omega[1] = 1;
    for (int it = 0; it < 4 * cap_ + 8; ++it) {
        Poly next = powmod_poly(omega, q_, hbar_, mod_);
        if (next == omega) break;
        omega = next;
    }

    // h(X) = prod_i (X - omega^{p^i}), coefficients in A = (Z/p^W)[X]/(hbar); they must be constants.
    std::vector<Poly> hA(1, Poly(D, 0));
    hA[0][0] = 1;
    Poly conj = omega;
    for (int i = 0; i < d; ++i) {
        std::vector<Poly> next(hA.size() + 1, Poly(D, 0));
        for (std::size_t k = 0; k < hA.size(); ++k) {
            for (std::size_t j = 0; j < D; ++j) next[k + 1][j] = addmod(next[k + 1][j], hA[k][j], mod_);
            Poly t = mulmod_poly(hA[k], conj, hbar_, mod_);
            for (std::size_t j = 0; j < D; ++j) next[k][j] = submod(next[k][j], t[j], mod_);
        }
        hA = std::move(next);
        conj = powmod_poly(conj, p, hbar_, mod_);
    }
    h_.assign(D + 1, 0);
    for (std::size_t k = 0; k <= D; ++k) {
        for (std::size_t j = 1; j < D; ++j)
            if (hA[k][j] != 0) throw std::logic_error("UnramifiedField: minimal polynomial not defined over Z_p");
        h_[k] = hA[k][0];
    }

    // w^{d+k} for k = 0..d-2.
    Poly hmon = h_;
    auto power_of_w = [&](u64 e) {
        Poly w(D, 0);
        if (d == 1) w[0] = submod(0, h_[0], mod_);
        else w[1] = 1;
        return powmod_poly(w, e, hmon, mod_);
    };
    for (int k = 0; k + 1 < d; ++k) {
        Poly r = power_of_w(static_cast<u64>(d + k));
        std::array<u64, kMaxDegree> row{};
        for (std::size_t j = 0; j < D; ++j) row[j] = r[j];
        red_.push_back(row);
    }
    for (int j = 0; j < d; ++j) {
        Poly f1 = power_of_w(static_cast<u64>(j) * p);
        Poly f2 = power_of_w(static_cast<u64>(j) * pow_u64(p, d - 1));
        for (std::size_t i = 0; i < D; ++i) {
            frob_[i][static_cast<std::size_t>(j)] = f1[i];
            frob_inv_[i][static_cast<std::size_t>(j)] = f2[i];
        }
    }
    for (int j = 0; j < d; ++j) {
        u64 t = 0;
        for (int i = 0; i < d; ++i) {
            Poly c = power_of_w(static_cast<u64>(j) * pow_u64(p, i));
            t = addmod(t, c[0], mod_);
        }
        tr_[static_cast<std::size_t>(j)] = t;
    }
}

const UnramifiedField& UnramifiedField::get(u64 p, int d) {
    static std::mutex mu;
    static std::map<std::pair<u64, int>, std::unique_ptr<UnramifiedField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, d}];
    if (!slot) slot.reset(new UnramifiedField(p, d));
    return *slot;
}

UnramifiedElement::UnramifiedElement(const UnramifiedField& F, int prec) : F_(&F), prec_(prec) {
    if (prec < 0 || prec > F.capacity()) throw PrecisionError("UnramifiedElement: precision out of range");
}

UnramifiedElement UnramifiedElement::from_int(const UnramifiedField& F, int prec, i64 x) {
    UnramifiedElement r(F, prec);
    r.c_[0] = reduce_signed(x, r.modulus());
    return r;
}

UnramifiedElement UnramifiedElement::from_padic(const UnramifiedField& F, const PadicInt& x) {
    if (x.prime() != F.prime()) throw std::invalid_argument("UnramifiedElement: mixed primes");
    UnramifiedElement r(F, x.prec());
    r.c_[0] = x.residue();
    return r;
}

UnramifiedElement UnramifiedElement::from_coords(const UnramifiedField& F, int prec, const std::vector<i64>& coords) {
    if (coords.size() > static_cast<std::size_t>(F.degree()))
        throw std::invalid_argument("UnramifiedElement: too many coordinates");
    UnramifiedElement r(F, prec);
    u64 m = r.modulus();
    for (std::size_t i = 0; i < coords.size(); ++i) r.c_[i] = reduce_signed(coords[i], m);
    return r;
}

UnramifiedElement UnramifiedElement::generator(const UnramifiedField& F, int prec) {
    UnramifiedElement r(F, prec);
    if (F.degree() == 1) r.c_[0] = submod(0, F.min_poly()[0], F.big_modulus()) % r.modulus();
    else r.c_[1] = 1 % r.modulus();
    return r;
}

std::vector<u64> UnramifiedElement::coords() const {
    return std::vector<u64>(c_.begin(), c_.begin() + degree());
}

bool UnramifiedElement::is_zero() const {
    for (int i = 0; i < degree(); ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

int UnramifiedElement::valuation() const {
    int v = prec_;
    u64 p = prime();
    for (int i = 0; i < degree(); ++i) {
        u64 x = c_[static_cast<std::size_t>(i)];
        if (x == 0) continue;
        int k = 0;
        while (x % p == 0) {
            x /= p;
            ++k;
        }
        v = std::min(v, k);
    }
    return v;
}

bool UnramifiedElement::in_base() const {
    for (int i = 1; i < degree(); ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

PadicInt UnramifiedElement::base_part() const { return PadicInt(prime(), prec_, c_[0]); }

UnramifiedElement UnramifiedElement::with_prec(int prec) const {
    if (prec > prec_) throw PrecisionError("UnramifiedElement: cannot raise precision");
    UnramifiedElement r(*F_, prec);
    u64 m = r.modulus();
    for (int i = 0; i < degree(); ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] % m;
    return r;
}

UnramifiedElement UnramifiedElement::operator-() const {
    UnramifiedElement r(*F_, prec_);
    u64 m = modulus();
    for (int i = 0; i < degree(); ++i) r.c_[static_cast<std::size_t>(i)] = submod(0, c_[static_cast<std::size_t>(i)], m);
    return r;
}

static void check_same_field(const UnramifiedField* a, const UnramifiedField* b) {
    if (a != b) throw std::invalid_argument("UnramifiedElement: elements of different fields");
}

UnramifiedElement& UnramifiedElement::operator+=(const UnramifiedElement& o) {
    check_same_field(F_, o.F_);
    if (o.prec_ < prec_) *this = with_prec(o.prec_);
    u64 m = modulus();
    for (int i = 0; i < degree(); ++i) {
        auto k = static_cast<std::size_t>(i);
        c_[k] = addmod(c_[k], o.c_[k] % m, m);
    }
    return *this;
}

UnramifiedElement& UnramifiedElement::operator-=(const UnramifiedElement& o) {
    check_same_field(F_, o.F_);
    if (o.prec_ < prec_) *this = with_prec(o.prec_);
    u64 m = modulus();
    for (int i = 0; i < degree(); ++i) {
        auto k = static_cast<std::size_t>(i);
        c_[k] = submod(c_[k], o.c_[k] % m, m);
    }
    return *this;
}

UnramifiedElement& UnramifiedElement::operator*=(const UnramifiedElement& o) {
    check_same_field(F_, o.F_);
    prec_ = std::min(prec_, o.prec_);
    const u64 m = modulus();
    const int d = degree();
    if (d == 1) {
        c_[0] = mulmod(c_[0], o.c_[0], m);
        return *this;
    }
    std::array<u128, 2 * kMaxDegree> acc{};
    // Accumulate unreduced products; reduce whenever the running sum could overflow.
    for (int i = 0; i < d; ++i) {
        u64 a = c_[static_cast<std::size_t>(i)] % m;
        if (a == 0) continue;
        for (int j = 0; j < d; ++j) {
            auto k = static_cast<std::size_t>(i + j);
            acc[k] = (acc[k] + static_cast<u128>(a) * (o.c_[static_cast<std::size_t>(j)] % m)) % m;
        }
    }
    std::array<u64, kMaxDegree> r{};
    for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = static_cast<u64>(acc[static_cast<std::size_t>(i)]);
    const auto& red = F_->reduction_table();
    for (int k = 0; k + 1 < d; ++k) {
        u64 hi = static_cast<u64>(acc[static_cast<std::size_t>(d + k)]);
        if (hi == 0) continue;
        for (int j = 0; j < d; ++j) {
            auto t = static_cast<std::size_t>(j);
            r[t] = addmod(r[t], mulmod(hi, red[static_cast<std::size_t>(k)][t] % m, m), m);
        }
    }
    c_ = r;
    return *this;
}

UnramifiedElement& UnramifiedElement::operator*=(i64 k) {
    u64 m = modulus();
    u64 kk = reduce_signed(k, m);
    for (int i = 0; i < degree(); ++i) c_[static_cast<std::size_t>(i)] = mulmod(c_[static_cast<std::size_t>(i)], kk, m);
    return *this;
}

UnramifiedElement& UnramifiedElement::operator*=(const PadicInt& k) {
    if (k.prime() != prime()) throw std::invalid_argument("UnramifiedElement: mixed primes");
    if (k.prec() < prec_) *this = with_prec(k.prec());
    u64 m = modulus();
    u64 kk = k.residue() % m;
    for (int i = 0; i < degree(); ++i) c_[static_cast<std::size_t>(i)] = mulmod(c_[static_cast<std::size_t>(i)], kk, m);
    return *this;
}

UnramifiedElement UnramifiedElement::pow(u64 e) const {
    UnramifiedElement r = one_like();
    UnramifiedElement b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

UnramifiedElement UnramifiedElement::inverse() const {
    if (!is_unit()) throw std::domain_error("UnramifiedElement: inverse of a non-unit");
    // Residue inverse x^{q-2} mod p, then Newton y <- y(2 - xy).
    UnramifiedElement y = with_prec(1).pow(F_->q() - 2);
    int cur = 1;
    while (cur < prec_) {
        cur = std::min(2 * cur, prec_);
        UnramifiedElement yy(*F_, cur);
        for (int i = 0; i < degree(); ++i) yy.c_[static_cast<std::size_t>(i)] = y.c_[static_cast<std::size_t>(i)];
        UnramifiedElement x = with_prec(cur);
        UnramifiedElement two = from_int(*F_, cur, 2);
        y = yy * (two - x * yy);
    }
    return y;
}

UnramifiedElement UnramifiedElement::divide_by_p(int k) const {
    if (k > prec_) throw PrecisionError("UnramifiedElement: division by p exhausts precision");
    u64 pk = pow_u64(prime(), k);
    UnramifiedElement r(*F_, prec_ - k);
    for (int i = 0; i < degree(); ++i) {
        u64 x = c_[static_cast<std::size_t>(i)];
        if (x % pk != 0) throw std::domain_error("UnramifiedElement: value not divisible by p^k");
        r.c_[static_cast<std::size_t>(i)] = x / pk;
    }
    return r;
}

UnramifiedElement UnramifiedElement::mul_p(int k) const {
    int np = std::min(prec_ + k, F_->capacity());
    UnramifiedElement r(*F_, np);
    u64 m = r.modulus();
    u64 pk = pow_u64(prime(), std::min(k, np)) % m;
    for (int i = 0; i < degree(); ++i) r.c_[static_cast<std::size_t>(i)] = mulmod(c_[static_cast<std::size_t>(i)], pk, m);
    return r;
}

bool UnramifiedElement::congruent(const UnramifiedElement& o) const {
    return congruent(o, std::min(prec_, o.prec_));
}

bool UnramifiedElement::congruent(const UnramifiedElement& o, int k) const {
    if (F_ != o.F_) return false;
    if (k > prec_ || k > o.prec_) return false;
    u64 m = pow_u64(prime(), k);
    for (int i = 0; i < degree(); ++i)
        if (c_[static_cast<std::size_t>(i)] % m != o.c_[static_cast<std::size_t>(i)] % m) return false;
    return true;
}

std::string UnramifiedElement::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < degree(); ++i) os << (i ? ", " : "") << c_[static_cast<std::size_t>(i)];
    os << "] + O(" << prime() << "^" << prec_ << ")";
    return os.str();
}

static UnramifiedElement apply_matrix(const UnramifiedElement& x,
                                      const std::array<std::array<u64, kMaxDegree>, kMaxDegree>& mat) {
    const int d = x.degree();
    if (d == 1) return x;
    u64 m = x.modulus();
    std::vector<i64> out(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        u64 acc = 0;
        for (int j = 0; j < d; ++j)
            acc = addmod(acc, mulmod(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % m, x.coord(j), m), m);
        out[static_cast<std::size_t>(i)] = static_cast<i64>(acc);
    }
    return UnramifiedElement::from_coords(x.field(), x.prec(), out);
}

UnramifiedElement frobenius(const UnramifiedElement& x) { return apply_matrix(x, x.field().frobenius_matrix()); }

UnramifiedElement frobenius_inverse(const UnramifiedElement& x) {
    return apply_matrix(x, x.field().frobenius_inverse_matrix());
}

UnramifiedElement frobenius_power(const UnramifiedElement& x, i64 k) {
    const i64 d = x.degree();
    i64 r = ((k % d) + d) % d;
    UnramifiedElement y = x;
    for (i64 i = 0; i < r; ++i) y = frobenius(y);
    return y;
}

PadicInt trace_to_qp(const UnramifiedElement& x) {
    u64 m = x.modulus();
    u64 t = 0;
    const auto& tr = x.field().basis_traces();
    for (int i = 0; i < x.degree(); ++i) t = addmod(t, mulmod(tr[static_cast<std::size_t>(i)] % m, x.coord(i), m), m);
    return PadicInt(x.prime(), x.prec(), t);
}

UnramifiedElement teichmuller(const UnramifiedField& F, const std::vector<i64>& residue, int prec) {
    UnramifiedElement x = UnramifiedElement::from_coords(F, prec, residue);
    if (x.with_prec(std::min(prec, 1)).is_zero()) throw std::domain_error("teichmuller: not a unit");
    for (int it = 0; it < 4 * prec + 8; ++it) {
        UnramifiedElement y = x.pow(F.q());
        if (y.congruent(x)) return x;
        x = y;
    }
    throw std::logic_error("teichmuller: iteration did not converge");
}

bool is_teichmuller(const UnramifiedElement& x) {
    return x.pow(x.field().q() - 1).congruent(x.one_like());
}

UnramifiedElement log_one_plus(const UnramifiedElement& x) {
    const int M = x.prec();
    const u64 p = x.prime();
    if (M == 0) return x;
    if (x.valuation() < 1) throw std::domain_error("log_one_plus: argument not in p O_F");
    // x = p t; log(1+x) = sum (-1)^{k+1} p^{k-v(k)} t^k / (k/p^{v(k)}), every term known mod p^M.
    UnramifiedElement t = x.divide_by_p(1);
    UnramifiedElement result(x.field(), M);
    UnramifiedElement tk = t.one_like();
    for (int k = 1; k <= M + 64; ++k) {
        tk *= t;
        int v = 0;
        i64 kk = k;
        while (kk % static_cast<i64>(p) == 0) {
            kk /= static_cast<i64>(p);
            ++v;
        }
        int e = k - v;
        if (e >= M) continue;
        UnramifiedElement term = tk.with_prec(M - e).mul_p(e) * PadicInt::from_int(p, M, kk).inverse();
        if (k % 2 == 0) term = -term;
        result += term;
    }
    return result;
}

UnramifiedElement log_unit(const UnramifiedElement& u) {
    if (!u.is_unit()) throw std::domain_error("log_unit: not a unit");
    const auto& F = u.field();
    UnramifiedElement v = u.pow(F.q() - 1);
    UnramifiedElement l = log_one_plus(v - v.one_like());
    return l * PadicInt::from_int(F.prime(), u.prec(), static_cast<i64>(F.q() - 1)).inverse();
}

UnramifiedElement branch_root(const UnramifiedElement& z, i64 n) {
    if (!is_teichmuller(z)) throw std::domain_error("branch_root: z is not a root of unity of order prime to p");
    return frobenius_power(z, -n);
}

}  // namespace padic
