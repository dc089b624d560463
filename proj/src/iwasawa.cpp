#include "padic/iwasawa.hpp"

#include <algorithm>

namespace padic {

std::size_t norm_input_length(u64 p, std::size_t n_out, int M) {
    return p * (n_out + static_cast<std::size_t>(M) + 2) + (p - 1) * static_cast<std::size_t>(M + 1) + 1;
}

IwasawaSeries pmap_preimage(const IwasawaSeries& g, std::size_t n_out) {
    const u64 p = g.proto().prime();
    const int M = g.prec();
    // h_k is affected by g_j for j up to about p (k + M), so solve on a longer window.
    const std::size_t inner = n_out + static_cast<std::size_t>(M) + 1;
    const std::size_t window = p * (inner - 1) + 1;
    if (g.size() < window) throw PrecisionError("pmap_preimage: input too short, need " + std::to_string(window) + " terms");
    IwasawaSeries target = g.truncated(window);
    IwasawaSeries h = IwasawaSeries::zero(UnramifiedElement(g.proto().field(), M), window);
    // Mod p, [p] h = h(T^p): each pass fixes one more p-adic digit of h.
    for (int it = 0; it <= M; ++it) {
        IwasawaSeries r = target - pmap(h);
        if (r.is_zero()) break;
        for (std::size_t k = 0; k < inner; ++k) h[k] += r[p * k];
    }
    IwasawaSeries check = target - pmap(h);
    for (std::size_t j = 0; j < p * (n_out - 1) + 1 && j < check.size(); ++j)
        if (!check[j].is_zero()) throw std::logic_error("pmap_preimage: series is not in the image of [p]");
    return h.truncated(n_out);
}

PowerSeries<CycloElement> substitute_xi(const IwasawaSeries& f) {
    const UnramifiedField& F = f.proto().field();
    const u64 p = F.prime();
    const int M = f.prec();
    const std::size_t K = f.size();
    const CycloElement zero(F, 1, M);
    const CycloElement xi = CycloElement::zeta_power(F, 1, M, 1);
    const CycloElement xi_minus_one = xi - zero.one_like();
    // Horner: r <- r * ((xi - 1) + xi T) + f_k.
    std::vector<CycloElement> r;
    for (std::size_t k = K; k-- > 0;) {
        std::vector<CycloElement> next(r.size() + 1, zero);
        for (std::size_t j = 0; j < r.size(); ++j) {
            next[j] += r[j] * xi_minus_one;
            next[j + 1] += r[j] * xi;
        }
        next[0] += CycloElement::from_base(f[k], 1);
        r = std::move(next);
    }
    r.resize(K, zero);
    for (std::size_t j = 0; j < K; ++j) {
        int prec = std::min<int>(M, static_cast<int>((K - j) / (p - 1)));
        r[j] = r[j].with_prec(std::max(prec, 0));
    }
    return PowerSeries<CycloElement>(std::move(r), zero);
}

static IwasawaSeries base_series(const PowerSeries<CycloElement>& s, int prec_cap) {
    const UnramifiedField& F = s.proto().field();
    IwasawaSeries out = IwasawaSeries::zero(UnramifiedElement(F, prec_cap), s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        const CycloElement& x = s[j];
        if (!x.in_base()) throw std::logic_error("coleman operator: coefficient does not descend to O_F");
        out[j] = x.base_part().lowered_to(prec_cap);
    }
    return out;
}

IwasawaSeries coleman_norm(const IwasawaSeries& f, std::size_t n_out) {
    if (!is_unit_series(f)) throw std::domain_error("coleman_norm: f must be a unit series");
    const u64 p = f.proto().prime();
    const int M = f.prec();
    const std::size_t need = norm_input_length(p, n_out, M);
    if (f.size() < need) throw PrecisionError("coleman_norm: need " + std::to_string(need) + " input terms");
    PowerSeries<CycloElement> fx = substitute_xi(f);
    PowerSeries<CycloElement> prod = fx;
    for (i64 a = 2; a < static_cast<i64>(p); ++a) prod *= fx.map([a](const CycloElement& x) { return x.galois(a); });
    std::size_t window = p * (n_out + static_cast<std::size_t>(M)) + 1;
    IwasawaSeries prod_base = base_series(prod.truncated(window), M) * f.truncated(window);
    return pmap_preimage(prod_base, n_out);
}

IwasawaSeries trace_projection(const IwasawaSeries& f) {
    const int M = f.prec();
    PowerSeries<CycloElement> fx = substitute_xi(f);
    IwasawaSeries s = f;
    for (std::size_t j = 0; j < f.size(); ++j) s[j] = (f[j] + fx[j].trace_to_base()).lowered_to(M);
    // drop coefficients with no digits left, then divide by p
    std::size_t keep = 0;
    while (keep < s.size() && s[keep].prec() >= 1) ++keep;
    s = s.truncated(keep);
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j].valuation() < 1) throw std::domain_error("trace_projection: sum over mu_p not divisible by p");
        s[j] = s[j].divide_by_p(1);
    }
    return s;
}

IwasawaSeries reduced_trace(const IwasawaSeries& f, std::size_t n_out) {
    const u64 p = f.proto().prime();
    const std::size_t need = norm_input_length(p, n_out, f.prec());
    if (f.size() < need) throw PrecisionError("reduced_trace: need " + std::to_string(need) + " input terms");
    IwasawaSeries t = trace_projection(f);
    const int M = f.prec() - 1;
    const std::size_t window = p * (n_out + static_cast<std::size_t>(M)) + 1;
    IwasawaSeries head = t.truncated(window);
    if (head.size() < window || head.prec() < M) throw PrecisionError("reduced_trace: input truncation too short");
    return pmap_preimage(head.lowered_to(M), n_out);
}

IwasawaSeries integral_log(const IwasawaSeries& f) {
    if (!is_unit_series(f)) throw std::domain_error("integral_log: not a unit series, use dlog_integral");
    const u64 p = f.proto().prime();
    IwasawaSeries ratio = f.pow(p) * pmap(frobenius_coeffs(f)).inverse();
    return log_series(ratio, 1);
}

IwasawaSeries dlog_integral(const IwasawaSeries& f) {
    if (!is_unit_series(f)) throw std::domain_error("dlog_integral: not a unit series");
    IwasawaSeries h = diff_D(f) * f.truncated(f.size() - 1).inverse();
    return h - pmap(frobenius_coeffs(h));
}

static IwasawaSeries inv_D_once(const IwasawaSeries& f) {
    const UnramifiedField& F = f.proto().field();
    const u64 p = F.prime();
    const std::size_t n = f.size() + 1;
    // g_{k+1} = (f_k - k g_k) / (k+1), with g_0 = 0 for now.
    int top = 0;
    for (std::size_t k = 0; k < f.size(); ++k) top = std::max(top, f[k].prec());
    IwasawaSeries g = IwasawaSeries::zero(UnramifiedElement(F, top), n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        UnramifiedElement num = f[k] - g[k] * static_cast<i64>(k);
        i64 kk = static_cast<i64>(k + 1);
        int v = 0;
        while (kk % static_cast<i64>(p) == 0) {
            kk /= static_cast<i64>(p);
            ++v;
        }
        if (num.prec() <= v) {
            for (std::size_t j = k + 1; j < n; ++j) g[j] = UnramifiedElement(F, 0);
            break;
        }
        if (v > 0) {
            if (num.valuation() < v) {
                if (num.prec() <= v) {
                    for (std::size_t j = k + 1; j < n; ++j) g[j] = UnramifiedElement(F, 0);
                    break;
                }
                throw std::domain_error("inv_D: input is not trace-zero");
            }
            num = num.divide_by_p(v);
        }
        g[k + 1] = num * PadicInt::from_int(p, num.prec(), kk).inverse();
    }
    // Constant term from Trace g = 0: g_0 = -(1/p) Tr_{R_1/O_F} g(xi - 1).
    // Evaluate on the prefix that maximizes min(prefix precision, length / (p - 1)).
    std::size_t usable = 0, best_len = 0;
    int best = -1, running = top;
    for (std::size_t L = 1; L <= n; ++L) {
        if (L > 1) running = std::min(running, g[L - 1].prec());
        if (running <= 0) break;
        usable = L;
        int q = std::min<int>(running, static_cast<int>(L / (p - 1)));
        if (q > best) {
            best = q;
            best_len = L;
        }
    }
    if (best < 2) throw PrecisionError("inv_D: too few digits left for the constant term");
    UnramifiedElement s = eval_series(g.truncated(best_len).lowered_to(best), 1).trace_to_base();
    if (s.valuation() < 1) throw std::domain_error("inv_D: input is not trace-zero");
    g[0] = -s.divide_by_p(1);
    return g.truncated(usable);
}

IwasawaSeries inv_D(const IwasawaSeries& f, int k) {
    // Trace-zero check on the coefficients that are reliably known.
    const u64 p = f.proto().prime();
    IwasawaSeries t = trace_projection(f);
    std::size_t reliable = f.size() > (p - 1) ? (f.size() / 2) : 0;
    for (std::size_t j = 0; j < std::min(reliable, t.size()); ++j)
        if (!t[j].is_zero()) throw std::domain_error("inv_D: input is not trace-zero");
    IwasawaSeries g = f;
    for (int i = 0; i < k; ++i) g = inv_D_once(g);
    return g;
}

void GroupRingElement::add(i64 a, const UnramifiedElement& c) {
    if (a % static_cast<i64>(c.prime()) == 0) throw std::domain_error("GroupRingElement: support must lie in Z_p^x");
    for (auto& [b, d] : terms_)
        if (b == a) {
            d += c;
            return;
        }
    terms_.emplace_back(a, c);
}

GroupRingElement GroupRingElement::sigma(i64 a, const UnramifiedField& F, int prec) {
    GroupRingElement g;
    g.add(a, UnramifiedElement::from_int(F, prec, 1));
    return g;
}

GroupRingElement GroupRingElement::omega_n(const UnramifiedField& F, int n, int prec) {
    GroupRingElement g;
    const u64 pn = pow_u64(F.prime(), n);
    for (u64 i = 1; i <= pn; ++i)
        if (i % F.prime()) g.add(static_cast<i64>(i), UnramifiedElement::from_int(F, prec, 1));
    return g;
}

GroupRingElement GroupRingElement::accelerate(int k) const {
    GroupRingElement g;
    for (const auto& [a, c] : terms_) {
        PadicInt ak = PadicInt::from_int(c.prime(), c.prec(), a);
        ak = k >= 0 ? ak.pow(static_cast<u64>(k)) : ak.inverse().pow(static_cast<u64>(-k));
        g.add(a, c * ak);
    }
    return g;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement g;
    for (const auto& [a, c] : x.terms_)
        for (const auto& [b, d] : y.terms_) {
            u64 m = pow_u64(c.prime(), c.field().capacity());
            i64 ab = static_cast<i64>(mulmod(reduce_signed(a, m), reduce_signed(b, m), m));
            g.add(ab, c * d);
        }
    return g;
}

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement g = x;
    for (const auto& [a, c] : y.terms_) g.add(a, c);
    return g;
}

IwasawaSeries apply_group_ring(const GroupRingElement& lambda, const IwasawaSeries& f, GroupRingMode mode) {
    const u64 p = f.proto().prime();
    if (mode == GroupRingMode::additive) {
        IwasawaSeries r = IwasawaSeries::zero(f.proto(), f.size());
        for (const auto& [a, c] : lambda.terms()) r += sigma_a(f, a) * c;
        return r;
    }
    IwasawaSeries r = IwasawaSeries::one(f.proto(), f.size());
    const bool principal = is_principal_series(f);
    for (const auto& [a, c] : lambda.terms()) {
        if (!c.in_base()) throw std::domain_error("apply_group_ring: multiplicative coefficients must lie in Z_p");
        PadicInt e = c.base_part();
        u64 exponent;
        if (principal) {
            exponent = e.residue();
        } else {
            i64 s = e.signed_residue();
            if (s < 0 || s > (1 << 20))
                throw std::domain_error("apply_group_ring: p-adic exponent needs a principal unit series");
            exponent = static_cast<u64>(s);
        }
        r *= sigma_a(f, a).pow(exponent);
    }
    (void)p;
    return r;
}

}  // namespace padic
