#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/iwasawa.hpp"
#include "padic/special_values.hpp"

namespace padic {

// Number of series terms needed so that level-n data of a series is known to `digits` digits.
std::size_t level_terms(u64 p, int n, int digits);

// f_{z,c}(T) = (1+T)^{(c-1)/2} (1 - z(1+T)) / (1 - z(1+T)^c), and for z = 1
// f_{1,c}(T) = c (1+T)^{(c-1)/2} T / ((1+T)^c - 1).
// For z = 1 the constant c is not norm-compatible (N c = c^p), so N f_{1,c} = c^{p-1} sigma_F f_{1,c};
// norm_ratio records that constant (1 for z != 1). Constants pair trivially with every eps_n.
struct SpecialColemanSeries {
    UnramifiedElement z;
    i64 c = 0;
    IwasawaSeries series;
    UnramifiedElement norm_ratio;
};

// Builds f_{z,c} with n_terms coefficients mod p^prec (prec = z.prec()) and checks
// f(0) = 1 and N f = norm_ratio * sigma_F f on the first `check_terms` coefficients (0 skips the norm check).
SpecialColemanSeries make_fzc(const UnramifiedElement& z, i64 c, std::size_t n_terms, std::size_t check_terms = 12);

// True when N f = sigma_F f holds on the first n_out coefficients; f needs norm_input_length terms.
bool norm_certificate(const IwasawaSeries& f, std::size_t n_out);
// N f = ratio * sigma_F f.
bool norm_certificate(const IwasawaSeries& f, std::size_t n_out, const UnramifiedElement& ratio);

enum class UnitFamily { one_minus_zT, cyclotomic_c, kza, trivial };
std::string family_name(UnitFamily f);
std::optional<UnitFamily> parse_family(const std::string& s);

struct FamilyParams {
    UnramifiedElement z;  // one_minus_zT, kza; must be a root of unity != 1
    i64 c = 0;            // cyclotomic_c: c = 1 mod p, c != 1
    i64 a = 1;            // kza: k_{z,a} = (1+T)^{-a/2} - z (1+T)^{a/2}, p not | a
};

// Norm-compatible unit family, stored as a product of built-in factors so that its Coleman
// series g (N g = sigma_F g) can be regenerated at any truncation and precision.
struct NormCompatibleUnit {
    const UnramifiedField* field = nullptr;
    int prec = 0;
    std::vector<std::pair<UnitFamily, FamilyParams>> factors;
    std::string family;
    bool norm_certificate = false;

    IwasawaSeries series(std::size_t n_terms, int prec) const;
    IwasawaSeries series(std::size_t n_terms) const { return series(n_terms, prec); }
    // eps_n = (sigma_F^{-n} g)(zeta_{p^n} - 1).
    CycloElement epsilon(int n) const;
    // Precision lowered or raised (factors are exact data).
    NormCompatibleUnit at_prec(int prec) const;
    friend NormCompatibleUnit operator*(const NormCompatibleUnit& x, const NormCompatibleUnit& y);
};

// Checks the norm certificate on `check_terms` coefficients; throws std::domain_error on failure.
NormCompatibleUnit builtin_unit_family(UnitFamily tag, const FamilyParams& params, const UnramifiedField& F, int prec,
                                       std::size_t check_terms = 12);

// phi^{CW}_m(eps): log g(e^X - 1) = sum_m phi_m X^m / m!. For m >= 1 this is D^{m-1}(Dg/g)(0);
// m = 0 gives log g(0) (Iwasawa logarithm).
UnramifiedElement coates_wiles(const NormCompatibleUnit& eps, int m);
// (D^m L g)(0) = (1 - p^{m-1} sigma_F) phi_m, m >= 1, computed from L g directly.
UnramifiedElement coates_wiles_dl(const NormCompatibleUnit& eps, int m);

// Twist of level-n data by sum c_a sigma_a: u^j -> u^{a j}.
std::vector<UnramifiedElement> twist_level(const std::vector<UnramifiedElement>& v, const GroupRingElement& lambda,
                                           int n);

// Tr_{F/Q_p} int_n(A * D L(sigma_F^{-n} g)) mod p^n, where A is given by its level-n data.
PadicInt hilbert_pairing(const std::vector<UnramifiedElement>& a_level, const NormCompatibleUnit& eps, int n);
// Exponent alpha of (f^lambda(zeta_{p^n} - 1), eps_n)_{p^n} = zeta^alpha for a series with N f = sigma_F f.
// lambda defaults to the identity.
PadicInt hilbert_exponent(const IwasawaSeries& f, const NormCompatibleUnit& eps, int n,
                          const std::optional<GroupRingElement>& lambda = std::nullopt);

// omega_n(k) = sum_{1 <= i <= p^n, p not | i} i^k sigma_i.
GroupRingElement omega_twist(const UnramifiedField& F, int n, int k, int prec);

// Auxiliary c for z = 1: c = 1 + p^e with e = max(1 + v_p(N_{m-1}), v_p(N_m)), N_k as in
// power_sum_divisibility.
i64 soule_aux_c(u64 p, int m);
// Auxiliary c for the z = 1 character: the smallest c, p not | c, minimizing v_p(1 - c^{1-m}).
i64 chi_aux_c(u64 p, int m);

enum class ChiVariant { restricted, full };

struct ReciprocityConfig {
    int guard = 4;  // extra digits on top of the level
};

// chi_m^z(rec eps) mod p^n. z = 1 goes through f_{1,c}, c = chi_aux_c: the exponent at level n + v,
// less that of (1+T)^{(c-1)/2}, is divided by (1 - c^{1-m}), v its valuation; requires m >= 2.
PadicInt chi_character(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps, int n, ChiVariant variant,
                       const ReciprocityConfig& cfg = {});
// chi~_m^z from the product over all 0 < a <= p^n, split by v_p(a) into norms of level-n values; m >= 2.
PadicInt chi_full_direct(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps, int n,
                         const ReciprocityConfig& cfg = {});

// Li_m^{(p)}(z) as a p-adic number in F; for z = 1 the L_p(m, omega^{1-m}) convention (d = 1 only).
struct PolylogValue {
    bool at_one = false;
    UnramifiedElement value;  // z != 1
    PadicNumber lp;           // z = 1
};
PolylogValue polylog_star(const UnramifiedElement& z, int m, int prec);

// (-1)^m Tr(Li^{(p)}_m(z) (1 - p^{m-1} sigma_F) phi_m) (restricted) or (-1)^m Tr(Li^{(p)}_m(z) phi_m) (full).
PadicNumber theorem_fullformula_rhs(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps,
                                    ChiVariant variant, int prec);

struct TwistedPairingSides {
    PadicInt lhs;     // Hilbert exponent mod p^n
    PadicNumber rhs;  // (-1)^{m-1} (c^{1-m} - 1) Tr(Li^{(p)}_m(z) (1 - p^{m-1} sigma_F) phi_m)
    i64 c = 0;
};
// Pairing of (f_{z^{1/p^n},c})^{omega_n(m-1)}(zeta_{p^n} - 1) with eps_n.
TwistedPairingSides twisted_pairing_sides(const UnramifiedElement& z, i64 c, int m, const NormCompatibleUnit& eps, int n,
                         const ReciprocityConfig& cfg = {});

struct ValueComparison {
    PadicNumber lhs;
    PadicNumber rhs;
    int agreement = 0;  // both sides known and equal modulo p^agreement
    int requested = 0;
};
int agreement_digits(const PadicNumber& a, const PadicNumber& b, int cap);

// Both sides of li_m(z)(rec eps) = (-1/(m-1)!) Tr({(1 - sigma_F/p^m) Li_m(z)} phi_m), m >= 2;
// LHS = (-1)^{m-1} chi~_m^z / (m-1)!, with chi~ taken at level n + v_p((m-1)!) so both sides are known mod p^n.
ValueComparison li_galois(const UnramifiedElement& z, int m, const NormCompatibleUnit& eps, int n,
                          const ReciprocityConfig& cfg = {});

// Input of the m = 1 Kummer comparison: a unit of O_F and, when available, a certified series
// whose value realizes it.
struct KummerInput {
    enum class Kind { teichmuller, norm_of_value, bare };
    Kind kind = Kind::bare;
    UnramifiedElement a;
    NormCompatibleUnit witness;  // norm_of_value: a = N_{F_n/F}(g_witness(zeta_{p^n} - 1))
    int level = 0;
};
KummerInput kummer_teichmuller(const UnramifiedElement& a);
// a = N_{F_n/F}(g(zeta_{p^n} - 1)) for the Coleman series g of a built-in family.
KummerInput kummer_norm_of_value(const NormCompatibleUnit& f, int n);
KummerInput kummer_bare(const UnramifiedElement& a);

struct KummerSides {
    std::optional<PadicInt> lhs;  // [a, eps_n] mod p^n, when a is expressible
    PadicInt rhs;                 // Tr({(1 - sigma_F/p) log a} phi_1) mod p^n
    std::string note;
};
KummerSides kummer_m1(const KummerInput& a, const NormCompatibleUnit& eps, int n);

// p^k phi_1 and sum_{i<p^k} zeta^i (sigma^{-k} g)'(zeta^i - 1) / (sigma^{-k} g)(zeta^i - 1).
struct LevelSumSides {
    UnramifiedElement lhs;
    UnramifiedElement rhs;
};
LevelSumSides level_sum_sides(const NormCompatibleUnit& eps, int k);

}  // namespace padic
