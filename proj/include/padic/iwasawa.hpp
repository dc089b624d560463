#pragma once

#include <utility>
#include <vector>

#include "padic/cyclo.hpp"

namespace padic {

// Terms of input needed by coleman_norm / reduced_trace to produce n_out coefficients mod p^M.
std::size_t norm_input_length(u64 p, std::size_t n_out, int M);

// Solves [p] h = g for h, given that g lies in the image of [p]. n_out coefficients of h
// are returned; g must have at least p * (n_out + M + 1) coefficients. Throws if the
// extracted h does not reproduce g.
IwasawaSeries pmap_preimage(const IwasawaSeries& g, std::size_t n_out);

// The mu_p-substituted series f(xi - 1 + xi T) over R_1, xi = zeta_p; coefficient j is
// known to floor((size - j) / (p - 1)) digits.
PowerSeries<CycloElement> substitute_xi(const IwasawaSeries& f);

// N f, the Coleman norm: [p](N f)(T) = prod_{xi in mu_p} f(xi(1+T) - 1).
IwasawaSeries coleman_norm(const IwasawaSeries& f, std::size_t n_out);
// [p](Trace f) = (1/p) sum_{xi in mu_p} f(xi(1+T) - 1), returned without extracting the preimage.
IwasawaSeries trace_projection(const IwasawaSeries& f);
// Trace f.
IwasawaSeries reduced_trace(const IwasawaSeries& f, std::size_t n_out);

// L(f) = (1/p) log(f^p / (sigma_F f)((1+T)^p - 1)) for a unit series f. One digit is lost.
IwasawaSeries integral_log(const IwasawaSeries& f);
// D L(f) = Df/f - [p] sigma_F (Df/f), valid for every unit series.
IwasawaSeries dlog_integral(const IwasawaSeries& f);

// The unique trace-zero g with D^k g = f, for trace-zero f.
IwasawaSeries inv_D(const IwasawaSeries& f, int k = 1);

// Finite element sum c_a sigma_a of O_F[[Z_p^x]], a stored as integer representatives.
class GroupRingElement {
public:
    GroupRingElement() = default;
    void add(i64 a, const UnramifiedElement& c);
    const std::vector<std::pair<i64, UnramifiedElement>>& terms() const { return terms_; }

    static GroupRingElement sigma(i64 a, const UnramifiedField& F, int prec);
    // omega_n = sum_{1 <= i <= p^n, p not | i} sigma_i.
    static GroupRingElement omega_n(const UnramifiedField& F, int n, int prec);
    // Weight accelerator: c_a sigma_a -> a^k c_a sigma_a.
    GroupRingElement accelerate(int k) const;
    friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y);

private:
    std::vector<std::pair<i64, UnramifiedElement>> terms_;
};

enum class GroupRingMode { additive, multiplicative };

IwasawaSeries apply_group_ring(const GroupRingElement& lambda, const IwasawaSeries& f, GroupRingMode mode);

}  // namespace padic
