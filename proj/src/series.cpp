#include "padic/series.hpp"

#include <algorithm>

namespace padic {

std::vector<UnramifiedElement> series_mul(const std::vector<UnramifiedElement>& a,
                                          const std::vector<UnramifiedElement>& b, std::size_t n,
                                          const UnramifiedElement& proto) {
    const UnramifiedField& F = proto.field();
    const int d = F.degree();
    const std::size_t an = std::min(a.size(), n), bn = std::min(b.size(), n);
    std::vector<UnramifiedElement> out;
    out.reserve(n);

    std::vector<int> pa(an), pb(bn);
    int top = 0;
    for (std::size_t i = 0; i < an; ++i) {
        pa[i] = std::min(i ? pa[i - 1] : proto.prec(), a[i].prec());
        top = std::max(top, a[i].prec());
    }
    for (std::size_t i = 0; i < bn; ++i) {
        pb[i] = std::min(i ? pb[i - 1] : proto.prec(), b[i].prec());
        top = std::max(top, b[i].prec());
    }
    const u64 M = pow_u64(F.prime(), std::max(top, 1));
    const auto& red = F.reduction_table();

    std::vector<u128> acc(static_cast<std::size_t>(2 * d - 1));
    for (std::size_t k = 0; k < n; ++k) {
        int prec = proto.prec();
        if (an) prec = std::min(prec, pa[std::min(k, an - 1)]);
        if (bn) prec = std::min(prec, pb[std::min(k, bn - 1)]);
        std::fill(acc.begin(), acc.end(), 0);
        int count = 0;
        std::size_t lo = k + 1 > bn ? k + 1 - bn : 0;
        std::size_t hi = std::min(k, an ? an - 1 : 0);
        if (an && lo <= hi) {
            for (std::size_t i = lo; i <= hi; ++i) {
                const UnramifiedElement& x = a[i];
                const UnramifiedElement& y = b[k - i];
                if (d == 1) {
                    acc[0] += static_cast<u128>(x.coord(0)) * y.coord(0);
                } else {
                    for (int s = 0; s < d; ++s) {
                        u64 xs = x.coord(s);
                        if (!xs) continue;
                        for (int t = 0; t < d; ++t) acc[static_cast<std::size_t>(s + t)] += static_cast<u128>(xs) * y.coord(t);
                    }
                }
                if (++count == 15) {
                    for (auto& v : acc) v %= M;
                    count = 0;
                }
            }
        }
        UnramifiedElement r(F, prec);
        const u64 m = r.modulus();
        std::vector<i64> coords(static_cast<std::size_t>(d));
        std::vector<u64> low(static_cast<std::size_t>(d));
        for (int s = 0; s < d; ++s) low[static_cast<std::size_t>(s)] = static_cast<u64>(acc[static_cast<std::size_t>(s)] % m);
        for (int k2 = 0; k2 + 1 < d; ++k2) {
            u64 h = static_cast<u64>(acc[static_cast<std::size_t>(d + k2)] % m);
            if (!h) continue;
            for (int s = 0; s < d; ++s)
                low[static_cast<std::size_t>(s)] = addmod(low[static_cast<std::size_t>(s)],
                    mulmod(h, red[static_cast<std::size_t>(k2)][static_cast<std::size_t>(s)] % m, m), m);
        }
        for (int s = 0; s < d; ++s) coords[static_cast<std::size_t>(s)] = static_cast<i64>(low[static_cast<std::size_t>(s)]);
        out.push_back(UnramifiedElement::from_coords(F, prec, coords));
    }
    return out;
}

IwasawaSeries series_from_ints(const UnramifiedField& F, int prec, const std::vector<i64>& coeffs, std::size_t n) {
    UnramifiedElement z(F, prec);
    IwasawaSeries r = IwasawaSeries::zero(z, n);
    for (std::size_t k = 0; k < std::min(n, coeffs.size()); ++k) r[k] = UnramifiedElement::from_int(F, prec, coeffs[k]);
    return r;
}

IwasawaSeries series_constant(const UnramifiedElement& c, std::size_t n) { return IwasawaSeries::constant(c, n); }

IwasawaSeries series_t(const UnramifiedField& F, int prec, std::size_t n) {
    return series_from_ints(F, prec, {0, 1}, n);
}

int floor_log(u64 p, u64 n) {
    int k = 0;
    u64 v = p;
    while (v <= n) {
        v *= p;
        ++k;
    }
    return k;
}

IwasawaSeries one_plus_t_pow(const UnramifiedField& F, int prec, std::size_t n, const PadicInt& a) {
    const u64 p = F.prime();
    int out_prec = std::min(prec, a.prec() - floor_log(p, std::max<u64>(n, 1)));
    if (out_prec < 0) throw PrecisionError("one_plus_t_pow: exponent known to too few digits");
    const u64 m = pow_u64(p, out_prec);
    const u64 A = a.residue();
    IwasawaSeries r = IwasawaSeries::zero(UnramifiedElement(F, out_prec), n);
    // C(A, k) = C(A, k-1) (A - k + 1) / k, tracked as unit * p^v.
    u64 unit = 1 % m;
    int v = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            u64 top = A - (k - 1);  // A >= k - 1 here
            u64 kk = k;
            int vt = 0, vk = 0;
            while (top % p == 0) {
                top /= p;
                ++vt;
            }
            while (kk % p == 0) {
                kk /= p;
                ++vk;
            }
            unit = mulmod(unit, mulmod(top % m, invmod(kk % m == 0 ? 1 : kk % m, m), m), m);
            v += vt - vk;
        }
        u64 val = v >= out_prec ? 0 : mulmod(unit, pow_u64(p, v), m);
        r[k] = UnramifiedElement::from_int(F, out_prec, static_cast<i64>(val));
        if (k >= A) {
            // C(A, j) = 0 for j > A
            for (std::size_t j = k + 1; j < n; ++j) r[j] = UnramifiedElement(F, out_prec);
            break;
        }
    }
    return r;
}

IwasawaSeries one_plus_t_pow(const UnramifiedField& F, int prec, std::size_t n, i64 a) {
    return one_plus_t_pow(F, prec, n, PadicInt::from_int(F.prime(), F.capacity(), a));
}

IwasawaSeries sigma_a(const IwasawaSeries& f, const PadicInt& a) {
    if (!a.is_unit()) throw std::domain_error("sigma_a: a must be a p-adic unit");
    const UnramifiedField& F = f.proto().field();
    IwasawaSeries P = one_plus_t_pow(F, F.capacity(), f.size(), a);
    P[0] = UnramifiedElement(F, P[0].prec());
    IwasawaSeries r = f.compose(P);
    r.level_certificate = f.level_certificate;
    return r;
}

IwasawaSeries sigma_a(const IwasawaSeries& f, i64 a) {
    if (a % static_cast<i64>(f.proto().prime()) == 0) throw std::domain_error("sigma_a: a must be a p-adic unit");
    if (a == 1) return f;
    return sigma_a(f, PadicInt::from_int(f.proto().prime(), f.proto().field().capacity(), a));
}

IwasawaSeries pmap(const IwasawaSeries& f) {
    const UnramifiedField& F = f.proto().field();
    IwasawaSeries P = one_plus_t_pow(F, F.capacity(), f.size(), static_cast<i64>(F.prime()));
    P[0] = UnramifiedElement(F, P[0].prec());
    return f.compose(P);
}

IwasawaSeries diff_D(const IwasawaSeries& f) {
    if (f.size() == 0) return f;
    std::size_t n = f.size() - 1;
    IwasawaSeries r = IwasawaSeries::zero(f.proto(), n);
    for (std::size_t k = 0; k < n; ++k)
        r[k] = f[k + 1] * static_cast<i64>(k + 1) + f[k] * static_cast<i64>(k);
    r.level_certificate = f.level_certificate;
    return r;
}

IwasawaSeries diff_D(const IwasawaSeries& f, int times) {
    IwasawaSeries r = f;
    for (int i = 0; i < times; ++i) r = diff_D(r);
    return r;
}

IwasawaSeries frobenius_coeffs(const IwasawaSeries& f, i64 k) {
    IwasawaSeries r = f.map([k](const UnramifiedElement& x) { return frobenius_power(x, k); });
    return r;
}

bool is_unit_series(const IwasawaSeries& f) { return f.size() > 0 && f[0].is_unit(); }

bool is_principal_series(const IwasawaSeries& f) {
    return f.size() > 0 && f[0].prec() > 0 && (f[0] - f[0].one_like()).valuation() >= 1;
}

IwasawaSeries log_series(const IwasawaSeries& f, int shift) {
    const UnramifiedElement& proto = f.proto();
    const u64 p = proto.prime();
    const int M = f.prec();
    IwasawaSeries y = f;
    y[0] -= y[0].one_like();
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k].valuation() < 1) throw std::domain_error("log_series: f - 1 is not divisible by p");
        y[k] = y[k].divide_by_p(1);
    }
    // p^{-shift} log(1 + pY) = sum (-1)^{k+1} p^{k - shift - v(k)} Y^k / (k / p^{v(k)}).
    // Y is known mod p^{M-1}, so term k is known mod p^{M-1+e}: the sum is known mod p^{M-shift}.
    const int target = M - shift;
    auto exponent = [&](int k, i64& unit) {
        int v = 0;
        unit = k;
        while (unit % static_cast<i64>(p) == 0) {
            unit /= static_cast<i64>(p);
            ++v;
        }
        return k - shift - v;
    };
    int kmax = 0;
    for (int k = 1; k <= target + shift + 48; ++k) {
        i64 u;
        if (exponent(k, u) < target) kmax = k;
    }
    IwasawaSeries result = IwasawaSeries::zero(UnramifiedElement(proto.field(), target), f.size());
    IwasawaSeries yk = IwasawaSeries::one(UnramifiedElement(proto.field(), M - 1), f.size());
    for (int k = 1; k <= kmax; ++k) {
        yk = yk * y;
        i64 unit;
        int e = exponent(k, unit);
        if (e >= target) continue;
        PadicInt inv = PadicInt::from_int(p, target, unit).inverse();
        if (k % 2 == 0) inv = -inv;
        result += yk.map([&](const UnramifiedElement& x) {
            return x.with_prec(std::min(x.prec(), target - e)).mul_p(e).lowered_to(target) * inv;
        });
    }
    return result;
}

}  // namespace padic
