#pragma once

#include <cstdint>
#include <vector>

#include "entprime/log_real.hpp"

namespace entprime {

// Two coupled spins S prepared in a product of spin coherent states with
// |s_A|^2 = |s_B|^2 = u. twoS = 2S keeps half-integer spins in integer
// bookkeeping; the Hilbert dimension per subsystem is twoS + 1 and the
// entropy signal carries modes up to 4S^2 = twoS^2 only.
struct SpinParams {
    int twoS = 1;
    double u = 1.0;
    double omega = 1.0;
};

// Mode ranges with distinct prime signatures:
//   I: 1 < n <= 2S, II: 2S < n <= 4S, III: 4S < n <= 4S^2, IV: n > 4S^2.
enum class SpinRegion { I, II, III, IV };

const char* to_string(SpinRegion r);

// Region of mode n; n = 1 is outside the scheme (throws for n < 2).
SpinRegion region_of(std::uint64_t n, const SpinParams& sp);

// Divisors mu of n admissible at fixed (k, m): mu <= 2S - k and
// n/mu <= 2S - m (the interval lower bound n/(2S-m) in exact integer form).
// Requires 0 <= k, m <= 2S - 1.
std::vector<std::uint64_t> lambda_bar_set(std::uint64_t n, const SpinParams& sp, int k, int m);

// All spin-system quantities. Every sum here is finite and exact; zeros
// are structural empty sums, never cancellations.
class SpinEngine {
public:
    explicit SpinEngine(SpinParams sp);

    const SpinParams& params() const { return p_; }
    double period() const;

    // Largest mode with nonvanishing amplitude: 4S^2.
    std::uint64_t mode_limit() const;

    // Cached G_chi(u) for chi <= 2S.
    LogReal g_poly(std::uint64_t chi) const;

    // cbar_n(u): the constrained double sum over (k, m) and admissible
    // divisors, evaluated through its exact per-divisor factorization
    //   4 (1+u)^(-8S) * sum_{mu | n, mu <= 2S, n/mu <= 2S} G_mu(u) G_{n/mu}(u).
    // Zero element when no divisor pair fits (primes in regions II-IV, all
    // of region IV).
    LogReal coeff(std::uint64_t n) const;

    // Region-I prime value 8 (1+u)^(-8S) G_1(u) G_n(u); equals coeff(n) iff
    // n is prime. Requires 2 <= n <= 2S.
    LogReal prime_bound_region1(std::uint64_t n) const;

    // Region-I gap over the reduced divisor set; zero element iff n prime.
    LogReal gap_region1(std::uint64_t n) const;

    // DC coefficient from the zero-frequency tuples: (1 - qbar)^2 with
    // qbar = G_0(u) (1+u)^(-4S).
    LogReal c0() const;

    // S_L(t) in [0, 1 - 1/(2S+1)], factorized O((2S+1)^2) per point.
    double entropy(double t) const;

    // S_L at t = (k/m_samples)*T with exact integer phase reduction.
    double entropy_sample(std::int64_t k, std::int64_t m_samples) const;

    // All m_samples period samples at once (shared trig tables).
    std::vector<double> entropy_period_samples(int m_samples) const;

    // Full-state simulation oracle: (2S+1)^2 amplitudes, partial trace,
    // 1 - Tr rho_A^2. Invariant under the local frequency omega0.
    double purity_oracle(double t, double omega0 = 0.0) const;

    // Direct quadruple loop over 0 <= k < j <= 2S, 0 <= m < l <= 2S
    // accumulating 4 xi u^{j+k+l+m} where (j-k)(l-m) = n. Never consults
    // divisor sets.
    LogReal tuple_scan(std::uint64_t n) const;

    // One quadruple pass bucketing every mode at once; index n in
    // [0, mode_limit()], entry 0 unused.
    std::vector<LogReal> tuple_scan_all() const;

    // Exact spectral alias budget: sum of coefficients at indices >= M/2
    // (zero once M/2 exceeds the mode limit).
    double alias_budget(int m_samples) const;

private:
    LogReal divisor_sum(std::uint64_t n, bool reduced) const;

    SpinParams p_;
    double log_norm8_;                 // -8S ln(1+u)
    std::vector<double> log_choose_;   // ln C(2S, k)
    std::vector<LogReal> g_;           // G_chi(u), chi = 0..2S
    std::vector<double> weights_;      // v_l = C(2S,l) u^l (1+u)^(-2S)
    std::vector<double> autocorr_;
};

}  // namespace entprime
