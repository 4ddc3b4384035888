#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entprime/log_real.hpp"
#include "entprime/special.hpp"

namespace entprime {

// Two coupled oscillators prepared in a product of coherent states with
// |alpha_A|^2 = |alpha_B|^2 = u/2. omega is the composite coupling frequency
// (time unit 1/omega, period T = 2*pi/omega); the Fourier coefficients
// themselves are omega-independent.
struct OscParams {
    double u = 1.0;
    double omega = 1.0;
    double series_eps = special::kDefaultSeriesEps;
    int fock_cutoff = 0;  // 0: policy default, see default_fock_cutoff
};

// Smallest admissible cutoff: ceil(u/2 + 12*sqrt(u/2 + 1)). Poisson(u/2)
// tail mass beyond 12 standard deviations is < 1e-30, below every
// tolerance used here.
int min_fock_cutoff(double u);

// Default policy: the 12-sigma floor plus a 30-level pad.
int default_fock_cutoff(double u);

// All oscillator-system quantities: the divisor-sum Fourier coefficients
// c_n(u), the prime lower bound, the f2/f3 semiprime family curves, the
// prime gap, the entropy time signal, and two independent oracles (direct
// tuple scan of the mode sum, full purity simulation).
//
// Modified-Bessel values I_chi(u) are memoized per engine. Lazy cache
// growth is not thread-safe; call ensure_bessel(max_order) before sharing
// a const engine across workers.
class OscEngine {
public:
    explicit OscEngine(OscParams p);

    const OscParams& params() const { return p_; }
    double period() const;

    // log I_chi(u), cached.
    LogReal bessel(std::uint64_t chi) const;
    void ensure_bessel(std::uint64_t max_order) const;

    // c_n(u) = 4 e^(-2u) sum_{mu | n} I_mu(u) I_{n/mu}(u), n >= 1.
    LogReal coeff(std::uint64_t n) const;

    // 8 e^(-2u) I_1(u) I_n(u); equals c_n iff n is prime (lower bound for n > 1).
    LogReal prime_bound(std::uint64_t n) const;

    // 8 e^(-2u) [I_1 I_n + I_q I_{n/q}] for q in {2, 3}; integer n divisible
    // by q only.
    LogReal family_curve(int q, std::uint64_t n) const;

    // c_n - prime_bound computed structurally from the reduced divisor set
    // (never as a difference of totals); the exact zero element iff n prime.
    // Requires n >= 2.
    LogReal gap(std::uint64_t n) const;

    // DC Fourier coefficient c_0(u) = (1 - e^(-u) I_0(u))^2, from the
    // zero-frequency tuple constraint. Cross-checked against the mode-sum
    // route on first use; disagreement above 1e-9 relative throws
    // std::runtime_error.
    LogReal c0() const;

    // Independent route: c_0 = sum_{n>=1} c_n (separability at t = 0),
    // truncated when a rigorous tail bound falls below 1e-12 relative.
    LogReal c0_series_sum() const;

    // S_L(t) in [0, 1), via the factorized O(K^2) form of the quadruple
    // mode sum.
    double entropy(double t) const;

    // S_L at t = (k/m_samples)*T with exact integer phase reduction, so
    // uniformly sampled series have bit-clean discrete orthogonality.
    double entropy_sample(std::int64_t k, std::int64_t m_samples) const;

    // All m_samples period samples at once (shared trig tables).
    std::vector<double> entropy_period_samples(int m_samples) const;

    // Full-state simulation: two-mode amplitudes, partial trace over B,
    // 1 - Tr rho_A^2. omega0 is the local oscillator frequency; the result
    // is invariant under it (local phases cancel in the partial trace).
    double purity_oracle(double t, double omega0 = 0.0) const;

    // Direct evaluation of the constrained quadruple mode sum truncated at
    // Fock occupation fock_limit; O(K^3)-class work, never consults the
    // divisor set. Requires n <= fock_limit.
    LogReal tuple_scan_coeff(std::uint64_t n, int fock_limit) const;

    // Upper bound on spectral extraction error for modes below m_samples/2:
    // the summed coefficient tail above the Nyquist index plus a rigorous
    // analytic remainder.
    double alias_budget(int m_samples) const;

private:
    LogReal divisor_sum(const std::vector<std::uint64_t>& mus, std::uint64_t n) const;
    LogReal bessel_total() const;  // S_all = sum_{chi>=1} I_chi(u) = (e^u - I_0)/2

    OscParams p_;
    double log_scale4_;               // ln 4 - 2u
    std::vector<double> weights_;     // Poisson weights w_j, j = 0..K
    std::vector<double> autocorr_;    // a_d = sum_j w_j w_{j+d}
    mutable std::vector<double> log_i_;
    mutable std::size_t bessel_filled_ = 0;
    mutable std::optional<LogReal> c0_cache_;
};

}  // namespace entprime
