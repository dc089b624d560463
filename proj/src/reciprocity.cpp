#include "padic/reciprocity.hpp"

#include <algorithm>
#include <stdexcept>

namespace padic {

namespace {

bool is_one(const UnramifiedElement& z) { return (z - z.one_like()).valuation() > 0; }

// A root of unity at another precision; raising re-lifts from the residue.
UnramifiedElement teich_at(const UnramifiedElement& z, int prec) {
    if (prec <= z.prec()) return z.with_prec(prec);
    std::vector<i64> res;
    for (u64 c : z.coords()) res.push_back(static_cast<i64>(c % z.prime()));
    return teichmuller(z.field(), res, prec);
}

void need_capacity(const UnramifiedField& F, int M, const char* who) {
    if (M > F.capacity())
        throw PrecisionError(std::string(who) + ": needs " + std::to_string(M) + " digits, capacity is " +
                             std::to_string(F.capacity()));
}

// ((1+T)^c - 1) / T.
IwasawaSeries cyclotomic_quotient(const UnramifiedField& F, int prec, std::size_t n, i64 c) {
    IwasawaSeries q = one_plus_t_pow(F, prec, n + 1, c);
    IwasawaSeries r = IwasawaSeries::zero(q.proto(), n);
    for (std::size_t k = 0; k < n; ++k) r[k] = q[k + 1];
    return r;
}

IwasawaSeries half_power(const UnramifiedField& F, int prec, std::size_t n, i64 num) {
    return one_plus_t_pow(F, prec, n, PadicInt::from_fraction(F.prime(), F.capacity(), num, 2));
}

IwasawaSeries factor_series(UnitFamily tag, const FamilyParams& fp, const UnramifiedField& F, std::size_t n, int prec) {
    const UnramifiedElement one = UnramifiedElement::from_int(F, prec, 1);
    switch (tag) {
    case UnitFamily::trivial: return IwasawaSeries::one(one, n);
    case UnitFamily::one_minus_zT: {
        UnramifiedElement z = teich_at(fp.z, prec);
        return IwasawaSeries::one(one, n) - IwasawaSeries::one_plus_t(one, n) * z;
    }
    case UnitFamily::cyclotomic_c: return cyclotomic_quotient(F, prec, n, fp.c);
    case UnitFamily::kza: {
        UnramifiedElement z = teich_at(fp.z, prec);
        return half_power(F, prec, n, -fp.a) - half_power(F, prec, n, fp.a) * z;
    }
    }
    throw std::logic_error("factor_series: unknown family");
}

PadicInt zero_mod(u64 p, int n) { return PadicInt::zero(p, n); }

// p^k mod p^n as a PadicInt of precision n.
PadicInt p_power_mod(u64 p, int k, int n) {
    if (k >= n) return zero_mod(p, n);
    return PadicInt::from_int(p, n, static_cast<i64>(pow_u64(p, k)));
}

}  // namespace

std::size_t level_terms(u64 p, int n, int digits) {
    return static_cast<std::size_t>(pow_u64(p, n)) * static_cast<std::size_t>(digits + 1) + 8;
}

bool norm_certificate(const IwasawaSeries& f, std::size_t n_out) {
    return norm_certificate(f, n_out, f.proto().one_like());
}

bool norm_certificate(const IwasawaSeries& f, std::size_t n_out, const UnramifiedElement& ratio) {
    const u64 p = f.proto().prime();
    const int M = f.prec();
    const std::size_t need = norm_input_length(p, n_out, M);
    if (f.size() < need)
        throw PrecisionError("norm_certificate: " + std::to_string(need) + " input terms needed, got " +
                             std::to_string(f.size()));
    IwasawaSeries N = coleman_norm(f.truncated(need), n_out);
    IwasawaSeries s = frobenius_coeffs(f) * ratio;
    if (N.prec() < 1) throw PrecisionError("norm_certificate: norm known to no digits");
    for (std::size_t k = 0; k < n_out; ++k)
        if (!N[k].congruent(s[k])) return false;
    return true;
}

SpecialColemanSeries make_fzc(const UnramifiedElement& z, i64 c, std::size_t n_terms, std::size_t check_terms) {
    const u64 p = z.prime();
    const UnramifiedField& F = z.field();
    const int prec = z.prec();
    if (c == 1 || c % static_cast<i64>(p) == 0) throw std::invalid_argument("make_fzc: need c != 1 and p not dividing c");
    if (!is_teichmuller(z)) throw std::domain_error("make_fzc: z must be a root of unity of order prime to p");
    const bool at_one = is_one(z);
    std::size_t N = n_terms;
    if (check_terms > 0) N = std::max(N, norm_input_length(p, check_terms, prec));

    IwasawaSeries f = half_power(F, prec, N, c - 1);
    if (!at_one) {
        IwasawaSeries one = IwasawaSeries::one(z, N);
        IwasawaSeries num = one - IwasawaSeries::one_plus_t(z, N) * z;
        IwasawaSeries den = one - one_plus_t_pow(F, prec, N, c) * z;
        f = f * num * den.inverse();
    } else {
        f = f * cyclotomic_quotient(F, prec, N, c).inverse() * c;
    }
    if (!(f[0] - z.one_like()).is_zero()) throw std::logic_error("make_fzc: f(0) != 1");
    UnramifiedElement ratio = at_one ? UnramifiedElement::from_int(F, prec, c).pow(p - 1) : z.one_like();
    if (check_terms > 0 && !norm_certificate(f, check_terms, ratio))
        throw std::logic_error("make_fzc: N f != sigma_F f to working precision");
    return SpecialColemanSeries{z, c, f.truncated(n_terms), ratio};
}

std::string family_name(UnitFamily f) {
    switch (f) {
    case UnitFamily::one_minus_zT: return "one_minus_zT";
    case UnitFamily::cyclotomic_c: return "cyclotomic_c";
    case UnitFamily::kza: return "kza";
    case UnitFamily::trivial: return "trivial";
    }
    return "?";
}

std::optional<UnitFamily> parse_family(const std::string& s) {
    for (UnitFamily f : {UnitFamily::one_minus_zT, UnitFamily::cyclotomic_c, UnitFamily::kza, UnitFamily::trivial})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

IwasawaSeries NormCompatibleUnit::series(std::size_t n_terms, int p) const {
    if (!field) throw std::logic_error("NormCompatibleUnit: no field");
    IwasawaSeries g = IwasawaSeries::one(UnramifiedElement::from_int(*field, p, 1), n_terms);
    for (const auto& [tag, fp] : factors)
        if (tag != UnitFamily::trivial) g = g * factor_series(tag, fp, *field, n_terms, p);
    return g;
}

CycloElement NormCompatibleUnit::epsilon(int n) const {
    IwasawaSeries g = series(level_terms(field->prime(), n, prec));
    return eval_series(frobenius_coeffs(g, -n), n);
}

NormCompatibleUnit NormCompatibleUnit::at_prec(int p) const {
    NormCompatibleUnit r = *this;
    r.prec = p;
    return r;
}

NormCompatibleUnit operator*(const NormCompatibleUnit& x, const NormCompatibleUnit& y) {
    if (x.field != y.field) throw std::invalid_argument("NormCompatibleUnit: fields differ");
    NormCompatibleUnit r = x;
    r.prec = std::min(x.prec, y.prec);
    r.factors.insert(r.factors.end(), y.factors.begin(), y.factors.end());
    r.family = x.family + "*" + y.family;
    r.norm_certificate = x.norm_certificate && y.norm_certificate;
    return r;
}

NormCompatibleUnit builtin_unit_family(UnitFamily tag, const FamilyParams& params, const UnramifiedField& F, int prec,
                                       std::size_t check_terms) {
    const u64 p = F.prime();
    const i64 pi = static_cast<i64>(p);
    std::string name = family_name(tag);
    if (tag == UnitFamily::one_minus_zT || tag == UnitFamily::kza) {
        if (params.z.prec() == 0 || &params.z.field() != &F)
            throw std::invalid_argument(name + ": z must be given in the same field");
        if (!is_teichmuller(params.z) || is_one(params.z))
            throw std::domain_error(name + ": z must be a root of unity of order prime to p, z != 1");
    }
    if (tag == UnitFamily::cyclotomic_c) {
        if (params.c == 1 || ((params.c - 1) % pi + pi) % pi != 0)
            throw std::domain_error("cyclotomic_c: need c = 1 mod p and c != 1");
        name += "(" + std::to_string(params.c) + ")";
    }
    if (tag == UnitFamily::kza) {
        if (params.a % pi == 0) throw std::domain_error("kza: p must not divide a");
        name += "(" + std::to_string(params.a) + ")";
    }
    NormCompatibleUnit u;
    u.field = &F;
    u.prec = prec;
    u.family = name;
    if (tag != UnitFamily::trivial) u.factors.emplace_back(tag, params);
    if (check_terms > 0) {
        IwasawaSeries g = u.series(norm_input_length(p, check_terms, prec));
        if (!norm_certificate(g, check_terms))
            throw std::domain_error(name + ": norm certificate N g = sigma_F g failed (family/parameter mismatch)");
        u.norm_certificate = true;
    }
    return u;
}

UnramifiedElement coates_wiles(const NormCompatibleUnit& eps, int m) {
    if (m < 0) throw std::invalid_argument("coates_wiles: m >= 0");
    IwasawaSeries g = eps.series(static_cast<std::size_t>(m) + 2);
    if (m == 0) return log_unit(g[0]);
    IwasawaSeries h = diff_D(g) * g.inverse();
    return diff_D(h, m - 1)[0];
}

UnramifiedElement coates_wiles_dl(const NormCompatibleUnit& eps, int m) {
    if (m < 1) throw std::invalid_argument("coates_wiles_dl: m >= 1");
    IwasawaSeries L = integral_log(eps.series(static_cast<std::size_t>(m) + 2));
    return diff_D(L, m)[0];
}

std::vector<UnramifiedElement> twist_level(const std::vector<UnramifiedElement>& v, const GroupRingElement& lambda,
                                           int n) {
    const std::size_t P = v.size();
    if (P == 0 || P != pow_u64(v[0].prime(), n)) throw std::invalid_argument("twist_level: expected p^n entries");
    std::vector<UnramifiedElement> r(P, v[0].zero_like());
    const i64 Pi = static_cast<i64>(P);
    for (const auto& [a, c] : lambda.terms()) {
        const std::size_t ar = static_cast<std::size_t>(((a % Pi) + Pi) % Pi);
        for (std::size_t j = 0; j < P; ++j) r[(ar * j) % P] += v[j] * c;
    }
    return r;
}

PadicInt hilbert_pairing(const std::vector<UnramifiedElement>& a_level, const NormCompatibleUnit& eps, int n) {
    const u64 p = eps.field->prime();
    const std::size_t P = pow_u64(p, n);
    if (a_level.size() != P) throw std::invalid_argument("hilbert_pairing: level data of the wrong size");
    IwasawaSeries g = frobenius_coeffs(eps.series(level_terms(p, n, eps.prec)), -n);
    std::vector<UnramifiedElement> b = level_reduction(dlog_integral(g), n);
    // int_n(A B) is the u^0 coefficient of A B in O_F[u]/(u^{p^n} - 1).
    UnramifiedElement s = a_level[0].zero_like();
    for (std::size_t j = 0; j < P; ++j) s += a_level[j] * b[(P - j) % P];
    PadicInt t = trace_to_qp(s);
    if (t.prec() < n)
        throw PrecisionError("hilbert_pairing: " + std::to_string(t.prec()) + " digits, level " + std::to_string(n));
    return t.with_prec(n);
}

PadicInt hilbert_exponent(const IwasawaSeries& f, const NormCompatibleUnit& eps, int n,
                          const std::optional<GroupRingElement>& lambda) {
    std::vector<UnramifiedElement> a = level_reduction(integral_log(f), n);
    if (lambda) a = twist_level(a, *lambda, n);
    return hilbert_pairing(a, eps, n);
}

GroupRingElement omega_twist(const UnramifiedField& F, int n, int k, int prec) {
    return GroupRingElement::omega_n(F, n, prec).accelerate(k);
}

i64 soule_aux_c(u64 p, int m) {
    auto vN = [&](int k) { return valuation(power_sum_divisibility(p, k, 1).n_m, p); };
    int e = std::max(1 + (m >= 1 ? vN(m - 1) : 0), vN(m));
    return 1 + static_cast<i64>(pow_u64(p, e));
}

i64 chi_aux_c(u64 p, int m) {
    const int cap = 20;
    i64 best = 2;
    int best_v = cap + 1;
    for (i64 c = 2; c <= static_cast<i64>(p * p) + 1; ++c) {
        if (c % static_cast<i64>(p) == 0) continue;
        int v = (PadicInt::from_int(p, cap, c).pow(static_cast<u64>(m - 1)) - PadicInt::one(p, cap)).valuation();
        if (v < best_v) best = c, best_v = v;
        if (v == 0) break;
    }
    return best;
}

namespace {

PadicInt chi_restricted(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps, int n,
                        const ReciprocityConfig& cfg) {
    const UnramifiedField& F = *eps.field;
    const u64 p = F.prime();
    if (m < 1) throw std::invalid_argument("chi_character: m >= 1");
    if (n < 1) throw std::invalid_argument("chi_character: n >= 1");
    if (!is_one(z)) {
        const int M = n + cfg.guard;
        need_capacity(F, M, "chi_character");
        UnramifiedElement w = teich_at(branch_root(z, n), M);
        const std::size_t N = level_terms(p, n, M);
        IwasawaSeries h = IwasawaSeries::one(w, N) - IwasawaSeries::one_plus_t(w, N) * w;
        return hilbert_exponent(h, eps.at_prec(M), n, omega_twist(F, n, m - 1, M));
    }
    if (m < 2) throw std::domain_error("chi_character: z = 1 needs m >= 2 (the f_{1,c} route divides by 1 - c^{1-m})");
    const i64 c = chi_aux_c(p, m);
    const int cap = F.capacity();
    PadicInt d = PadicInt::one(p, cap) - PadicInt::from_int(p, cap, c).inverse().pow(static_cast<u64>(m - 1));
    const int v = d.valuation();
    const int n2 = n + v, M = n2 + cfg.guard;
    need_capacity(F, M, "chi_character");
    const std::size_t N = level_terms(p, n2, M);
    SpecialColemanSeries f = make_fzc(UnramifiedElement::from_int(F, M, 1), c, N);
    const NormCompatibleUnit e = eps.at_prec(M);
    const GroupRingElement w = omega_twist(F, n2, m - 1, M);
    // f_{1,c} = c (1+T)^{(c-1)/2} T/((1+T)^c - 1); the root-of-unity factor is paired separately and removed
    PadicInt ex = hilbert_exponent(f.series, e, n2, w) - hilbert_exponent(half_power(F, M, N, c - 1), e, n2, w);
    if (ex.valuation() < v) throw std::logic_error("chi_character: exponent not divisible by 1 - c^{1-m}");
    PadicInt q = ex.divide_by_p(v).with_prec(n);
    return q * d.divide_by_p(v).with_prec(n).inverse();
}

}  // namespace

PadicInt chi_character(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps, int n, ChiVariant variant,
                       const ReciprocityConfig& cfg) {
    if (variant == ChiVariant::restricted) return chi_restricted(z, m, eps, n, cfg);
    if (m < 2) throw std::domain_error("chi_character: the full character needs m >= 2");
    const u64 p = eps.field->prime();
    const int d = is_one(z) ? 1 : frobenius_period(z);
    PadicInt s = zero_mod(p, n);
    for (int k = 0; k < d; ++k) {
        UnramifiedElement zk = is_one(z) ? z : branch_root(z, k);
        s += chi_restricted(zk, m, eps, n, cfg) * p_power_mod(p, (m - 1) * k, n);
    }
    PadicInt den = PadicInt::one(p, n) - p_power_mod(p, (m - 1) * d, n);
    return s * den.inverse();
}

PadicInt chi_full_direct(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps, int n,
                         const ReciprocityConfig& cfg) {
    if (m < 2) throw std::domain_error("chi_full_direct: m >= 2");
    if (is_one(z)) throw std::domain_error("chi_full_direct: z = 1 has no h-route");
    const UnramifiedField& F = *eps.field;
    const u64 p = F.prime();
    const int M = n + cfg.guard;
    need_capacity(F, M, "chi_full_direct");
    const std::size_t P = pow_u64(p, n);
    const u64 mod = pow_u64(p, M);
    std::vector<UnramifiedElement> acc(P, UnramifiedElement(F, M));
    // a = p^k a': the factors (1 - zeta_{p^{n-k}}^{a'} z^{1/p^n}) are norms from level n of
    // (1 - zeta_{p^n}^{a'} z^{1/p^{n+k}}); a = p^n only contributes multiples of p^n.
    for (int k = 0; k < n; ++k) {
        const int vk = (m - 1) * k;
        if (vk >= n) break;
        UnramifiedElement w = teich_at(branch_root(z, n + k), M);
        const std::size_t N = level_terms(p, n, M);
        IwasawaSeries h = IwasawaSeries::one(w, N) - IwasawaSeries::one_plus_t(w, N) * w;
        std::vector<UnramifiedElement> a = level_reduction(integral_log(h), n);
        const u64 Pk = pow_u64(p, n - k);
        const u64 pk_weight = pow_u64(p, vk);
        GroupRingElement lam;
        for (u64 a1 = 1; a1 <= Pk; ++a1) {
            if (a1 % p == 0) continue;
            u64 wgt = mulmod(powmod(a1, static_cast<u64>(m - 1), mod), pk_weight, mod);
            UnramifiedElement c = UnramifiedElement::from_int(F, M, static_cast<i64>(wgt));
            for (u64 b = 1; b <= P; b += Pk) lam.add(static_cast<i64>((a1 * b) % P), c);
        }
        std::vector<UnramifiedElement> t = twist_level(a, lam, n);
        for (std::size_t j = 0; j < P; ++j) acc[j] += t[j];
    }
    return hilbert_pairing(acc, eps.at_prec(M), n);
}

PolylogValue polylog_star(const UnramifiedElement& z, int m, int prec) {
    PolylogValue v;
    if (is_one(z)) {
        v.at_one = true;
        v.lp = lp_value(z.prime(), m, default_aux_c(z.prime(), m), prec);
        return v;
    }
    v.value = li_p_star(PolylogPoint::root_of_unity, teich_at(z, prec), m);
    return v;
}

namespace {

// (1 - p^{m-1} sigma_F) phi_m or phi_m.
UnramifiedElement cw_combination(const NormCompatibleUnit& eps, int m, ChiVariant variant) {
    UnramifiedElement phi = coates_wiles(eps, m);
    if (variant == ChiVariant::full) return phi;
    return phi - frobenius(phi).mul_p(m - 1);
}

PadicNumber trace_against(const PolylogValue& L, const UnramifiedElement& x) {
    if (L.at_one) return L.lp * PadicNumber::integral(trace_to_qp(x));
    return PadicNumber::integral(trace_to_qp(L.value * x));
}

i64 factorial(int k) {
    i64 f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

PadicNumber theorem_fullformula_rhs(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps,
                                    ChiVariant variant, int prec) {
    if (m < 1) throw std::invalid_argument("theorem_fullformula_rhs: m >= 1");
    if (variant == ChiVariant::full && m < 2) throw std::domain_error("theorem_fullformula_rhs: (2) needs m >= 2");
    NormCompatibleUnit e = eps.at_prec(prec);
    PadicNumber r = trace_against(polylog_star(z, m, prec), cw_combination(e, m, variant));
    return (m % 2) ? -r : r;
}

TwistedPairingSides twisted_pairing_sides(const UnramifiedElement& z, i64 c, int m, const NormCompatibleUnit& eps, int n,
                         const ReciprocityConfig& cfg) {
    const UnramifiedField& F = *eps.field;
    const u64 p = F.prime();
    const int M = n + cfg.guard;
    need_capacity(F, M, "twisted_pairing_sides");
    const bool at_one = is_one(z);
    UnramifiedElement w = at_one ? UnramifiedElement::from_int(F, M, 1) : teich_at(branch_root(z, n), M);
    SpecialColemanSeries f = make_fzc(w, c, level_terms(p, n, M));
    NormCompatibleUnit e = eps.at_prec(M);
    TwistedPairingSides out;
    out.c = c;
    out.lhs = hilbert_exponent(f.series, e, n, omega_twist(F, n, m - 1, M));
    UnramifiedElement x = cw_combination(e, m, ChiVariant::restricted);
    if (!at_one) {
        PadicInt cf = PadicInt::from_int(p, M, c).inverse().pow(static_cast<u64>(m - 1)) - PadicInt::one(p, M);
        UnramifiedElement li = li_p_star(PolylogPoint::root_of_unity, teich_at(z, M), m);
        out.rhs = PadicNumber::integral(cf * trace_to_qp(li * x));
    } else {
        // moment of E_c at -m over the units is (c^{1-m} - 1) L_p(m, omega^{1-m}); finite also at m = 1
        PMeasure E = bernoulli_measure(UnramifiedField::get(p, 1), M, c, 4);
        UnramifiedElement mom = moment(E, -m, MomentDomain::Zp_units, 2);
        out.rhs = PadicNumber::integral(mom.base_part() * trace_to_qp(x));
    }
    if (m % 2 == 0) out.rhs = -out.rhs;
    return out;
}

int agreement_digits(const PadicNumber& a, const PadicNumber& b, int cap) {
    const int k = std::min({cap, a.abs_prec(), b.abs_prec()});
    const int v = (a - b).valuation();
    return std::min(v, k);
}

ValueComparison li_galois(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps, int n,
                          const ReciprocityConfig& cfg) {
    if (m < 2) throw std::domain_error("li_galois: m >= 2 (m = 1 is the Kummer comparison)");
    const UnramifiedField& F = *eps.field;
    const u64 p = F.prime();
    const PadicInt fact = PadicInt::from_int(p, F.capacity(), factorial(m - 1));
    const int vf = fact.valuation();
    ValueComparison out;
    out.requested = n;
    // the character is taken at level n + v_p((m-1)!) so that the quotient is known mod p^n
    const int n_chi = n + vf;
    PadicNumber lhs = PadicNumber::integral(chi_character(z, m, eps, n_chi, ChiVariant::full, cfg)).divided_by(fact);
    out.lhs = (m % 2 == 0) ? -lhs : lhs;

    const int M = n_chi + cfg.guard + m;
    need_capacity(F, M, "li_galois");
    UnramifiedElement phi = coates_wiles(eps.at_prec(M), m);
    PadicNumber core;
    if (is_one(z)) {
        // (1 - sigma_F/p^m) Li_m(1) stands for L_p(m, omega^{1-m})
        core = lp_value(p, m, default_aux_c(p, m), M) * PadicNumber::integral(trace_to_qp(phi));
    } else {
        UnramifiedElement li = li_padic(teich_at(z, M), m);
        UnramifiedElement corrected = (li.mul_p(m).lowered_to(li.prec()) - frobenius(li)).divide_by_p(m);
        core = PadicNumber::integral(trace_to_qp(corrected * phi));
    }
    out.rhs = -core.divided_by(fact);
    out.agreement = agreement_digits(out.lhs, out.rhs, n);
    return out;
}

KummerInput kummer_teichmuller(const UnramifiedElement& a) {
    if (!is_teichmuller(a)) throw std::domain_error("kummer_teichmuller: a is not a root of unity of order prime to p");
    KummerInput in;
    in.kind = KummerInput::Kind::teichmuller;
    in.a = a;
    return in;
}

KummerInput kummer_norm_of_value(const NormCompatibleUnit& f, int n) {
    const u64 p = f.field->prime();
    CycloElement x = eval_series(f.series(level_terms(p, n, f.prec)), n);
    CycloElement nx = x;
    const u64 P = pow_u64(p, n);
    for (u64 b = 2; b < P; ++b)
        if (b % p) nx = nx * x.galois(static_cast<i64>(b));
    if (!nx.in_base()) throw std::logic_error("kummer_norm_of_value: norm does not lie in O_F");
    KummerInput in;
    in.kind = KummerInput::Kind::norm_of_value;
    in.a = nx.base_part();
    in.witness = f;
    in.level = n;
    return in;
}

KummerInput kummer_bare(const UnramifiedElement& a) {
    KummerInput in;
    in.kind = KummerInput::Kind::bare;
    in.a = a;
    return in;
}

KummerSides kummer_m1(const KummerInput& in, const NormCompatibleUnit& eps, int n) {
    const UnramifiedField& F = *eps.field;
    const u64 p = F.prime();
    const int M = eps.prec;
    if (!in.a.is_unit()) throw std::domain_error("kummer_m1: a must be a unit");
    UnramifiedElement la = log_unit(in.a.lowered_to(M));
    UnramifiedElement x = la - frobenius(la).divide_by_p(1);
    PadicInt rhs = trace_to_qp(x * coates_wiles(eps, 1));
    if (rhs.prec() < n) throw PrecisionError("kummer_m1: right side known to fewer than n digits");
    KummerSides out;
    out.rhs = rhs.with_prec(n);
    const std::size_t N = level_terms(p, n, M);
    switch (in.kind) {
    case KummerInput::Kind::teichmuller:
        out.lhs = hilbert_exponent(series_constant(teich_at(in.a, M), N), eps, n);
        out.note = "a is a Teichmueller constant: the constant series satisfies N a = a^p = sigma_F a";
        break;
    case KummerInput::Kind::norm_of_value:
        if (in.level != n) throw std::invalid_argument("kummer_m1: witness norm was taken at another level");
        out.lhs = hilbert_exponent(in.witness.series(N, M), eps, n, omega_twist(F, n, 0, M));
        out.note = "a = N(g(zeta - 1)) for the certified series of " + in.witness.family;
        break;
    case KummerInput::Kind::bare:
        out.note = "a is not given as the value of a certified series; [a, eps_n] is not computable by this route";
        break;
    }
    return out;
}

LevelSumSides level_sum_sides(const NormCompatibleUnit& eps, int k) {
    const u64 p = eps.field->prime();
    const int M = eps.prec;
    const std::size_t N = level_terms(p, k, M);
    IwasawaSeries gk = frobenius_coeffs(eps.series(N + 1), -k);
    IwasawaSeries dg = diff_D(gk);
    gk = gk.truncated(N);
    // i < p^k with v_p(i) = j runs over the conjugates of zeta_{p^{k-j}}.
    UnramifiedElement s(*eps.field, M);
    for (int l = 0; l <= k; ++l) {
        CycloElement q = eval_series(dg, l) * eval_series(gk, l).inverse();
        s += q.trace_to_base();
    }
    LevelSumSides out;
    out.lhs = coates_wiles(eps, 1).mul_p(k);
    out.rhs = s;
    return out;
}

}  // namespace padic
