#pragma once

#include <cstdint>

#include "entprime/log_real.hpp"

namespace entprime::special {

// Default relative truncation tolerance for infinite series. Coefficient
// equalities downstream must hold to ~1e-12; sources are kept two orders
// tighter.
inline constexpr double kDefaultSeriesEps = 1e-16;

// ln(n!), table-backed for n < 2^17, lgamma fallback beyond.
double log_factorial(std::uint64_t n);

// ln C(n, k). Exact 64-bit integer arithmetic while C(n, k) fits a machine
// word (n <= 67), log-factorial differences otherwise.
double log_binomial(std::uint64_t n, std::uint64_t k);

// Modified Bessel function of the first kind, log domain:
//   I_chi(w) = sum_{k>=0} (w/2)^{2k+chi} / (k! (chi+k)!)
// All terms are positive, so every partial sum is a strict lower bound.
// Terms grow to a peak near k = (-chi + sqrt(chi^2 + w^2))/2 and only then
// decay; the stopping rule requires both the peak to be passed and the
// current term to fall below eps * partial_sum.
// Throws std::invalid_argument for w <= 0 or eps outside (0, 1e-6).
LogReal bessel_i_log(std::uint64_t chi, double w, double eps = kDefaultSeriesEps);

// Finite binomial sum
//   G_chi(w) = sum_{k=0}^{2S-chi} C(2S,k) C(2S,k+chi) w^{2k+chi}
// (twoS = 2S). Exact finite sum, no truncation; the empty sum (chi > 2S)
// is the zero element. Throws std::invalid_argument for twoS < 1 or w <= 0.
LogReal g_poly_log(std::uint64_t chi, std::uint64_t twoS, double w);

}  // namespace entprime::special
