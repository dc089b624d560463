#pragma once

#include "padic/power_series.hpp"
#include "padic/unramified.hpp"

namespace padic {

using IwasawaSeries = PowerSeries<UnramifiedElement>;

// Fast truncated product for O_F coefficients. Coefficient k of the result carries the
// minimum precision of the operand coefficients of index <= k.
std::vector<UnramifiedElement> series_mul(const std::vector<UnramifiedElement>& a,
                                          const std::vector<UnramifiedElement>& b, std::size_t n,
                                          const UnramifiedElement& proto);

IwasawaSeries series_from_ints(const UnramifiedField& F, int prec, const std::vector<i64>& coeffs, std::size_t n);
IwasawaSeries series_constant(const UnramifiedElement& c, std::size_t n);
// The series T.
IwasawaSeries series_t(const UnramifiedField& F, int prec, std::size_t n);

// floor(log_p(n)) for n >= 1.
int floor_log(u64 p, u64 n);

// (1+T)^a for a in Z_p. Coefficients are exact binomials C(A, k) for the integer representative
// A of a; precision is min(prec, a.prec() - floor(log_p(n))).
IwasawaSeries one_plus_t_pow(const UnramifiedField& F, int prec, std::size_t n, const PadicInt& a);
IwasawaSeries one_plus_t_pow(const UnramifiedField& F, int prec, std::size_t n, i64 a);

// sigma_a f = f((1+T)^a - 1) for a in Z_p^x.
IwasawaSeries sigma_a(const IwasawaSeries& f, const PadicInt& a);
IwasawaSeries sigma_a(const IwasawaSeries& f, i64 a);
// [p] f = f((1+T)^p - 1).
IwasawaSeries pmap(const IwasawaSeries& f);
// D = (1+T) d/dT; one term of truncation is lost.
IwasawaSeries diff_D(const IwasawaSeries& f);
IwasawaSeries diff_D(const IwasawaSeries& f, int times);
// sigma_F^k applied to every coefficient.
IwasawaSeries frobenius_coeffs(const IwasawaSeries& f, i64 k = 1);

bool is_unit_series(const IwasawaSeries& f);
// Constant term congruent to 1 modulo p.
bool is_principal_series(const IwasawaSeries& f);

// For f with f - 1 in p O_F[[T]]: returns p^{-shift} log f, shift in {0, 1}.
// Precision: that of (f - 1)/p; the shift is absorbed exactly whenever p^{-shift} log f is integral.
IwasawaSeries log_series(const IwasawaSeries& f, int shift = 0);

}  // namespace padic
