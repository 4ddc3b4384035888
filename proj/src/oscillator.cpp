#include "entprime/oscillator.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "entprime/numtheory.hpp"
#include "period_sampling.hpp"

namespace entprime {

namespace {
constexpr double kLn2 = 0.6931471805599453094;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}
}  // namespace

int min_fock_cutoff(double u) {
    return static_cast<int>(std::ceil(u / 2.0 + 12.0 * std::sqrt(u / 2.0 + 1.0)));
}

int default_fock_cutoff(double u) { return min_fock_cutoff(u) + 30; }

OscEngine::OscEngine(OscParams p) : p_(p) {
    if (!(p_.u > 0.0)) throw std::invalid_argument("OscEngine: u must be positive");
    if (!(p_.omega > 0.0)) throw std::invalid_argument("OscEngine: omega must be positive");
    if (p_.fock_cutoff == 0) p_.fock_cutoff = default_fock_cutoff(p_.u);
    if (p_.fock_cutoff < min_fock_cutoff(p_.u))
        throw std::invalid_argument("OscEngine: fock_cutoff below the Poisson-tail policy");
    log_scale4_ = 2.0 * kLn2 - 2.0 * p_.u;

    const int K = p_.fock_cutoff;
    const double lu2 = std::log(p_.u / 2.0);
    weights_.resize(K + 1);
    for (int j = 0; j <= K; ++j)
        weights_[j] = std::exp(-p_.u / 2.0 + j * lu2 - special::log_factorial(j));
    autocorr_.resize(K + 1);
    for (int d = 0; d <= K; ++d) {
        double a = 0.0;
        for (int j = 0; j + d <= K; ++j) a += weights_[j] * weights_[j + d];
        autocorr_[d] = a;
    }
}

double OscEngine::period() const { return kTwoPi / p_.omega; }

void OscEngine::ensure_bessel(std::uint64_t max_order) const {
    if (max_order + 1 <= bessel_filled_) return;
    log_i_.resize(max_order + 1);
    for (std::uint64_t chi = bessel_filled_; chi <= max_order; ++chi)
        log_i_[chi] = special::bessel_i_log(chi, p_.u, p_.series_eps).log_mag();
    bessel_filled_ = max_order + 1;
}

LogReal OscEngine::bessel(std::uint64_t chi) const {
    ensure_bessel(chi);
    return LogReal::from_log(log_i_[chi]);
}

LogReal OscEngine::divisor_sum(const std::vector<std::uint64_t>& mus, std::uint64_t n) const {
    if (mus.empty()) return LogReal::zero();
    ensure_bessel(n);
    std::vector<double> terms;
    terms.reserve(mus.size());
    for (std::uint64_t mu : mus) terms.push_back(log_i_[mu] + log_i_[n / mu]);
    return log_mul(log_sum_positive(terms), LogReal::from_log(log_scale4_));
}

LogReal OscEngine::coeff(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("osc coeff: n must be positive");
    return divisor_sum(numtheory::divisors(n).divisors, n);
}

LogReal OscEngine::prime_bound(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("prime_bound: n must be positive");
    ensure_bessel(n);
    return LogReal::from_log(log_scale4_ + kLn2 + log_i_[1] + log_i_[n]);
}

LogReal OscEngine::family_curve(int q, std::uint64_t n) const {
    if (q != 2 && q != 3) throw std::invalid_argument("family_curve: q must be 2 or 3");
    if (n < static_cast<std::uint64_t>(q) || n % static_cast<std::uint64_t>(q) != 0)
        throw std::invalid_argument("family_curve: n must be a multiple of q");
    ensure_bessel(n);
    std::vector<double> terms{log_i_[1] + log_i_[n], log_i_[q] + log_i_[n / q]};
    return log_mul(log_sum_positive(terms), LogReal::from_log(log_scale4_ + kLn2));
}

LogReal OscEngine::gap(std::uint64_t n) const {
    if (n < 2) throw std::invalid_argument("gap: n must be >= 2");
    return divisor_sum(numtheory::reduced_divisors(n), n);
}

LogReal OscEngine::bessel_total() const {
    // sum_{chi >= 1} I_chi(u) = (e^u - I_0(u)) / 2, from sum_k I_k = e^u.
    const LogReal eu = LogReal::from_log(p_.u);
    return log_mul(log_sub(eu, bessel(0)), LogReal::from_log(-kLn2));
}

LogReal OscEngine::c0_series_sum() const {
    const LogReal s_all = bessel_total();
    const double log_stop = std::log(1e-12);
    LogReal partial = LogReal::zero();
    LogReal head = LogReal::zero();  // sum_{chi <= M} I_chi
    std::uint64_t head_to = 0;
    constexpr std::uint64_t kMaxModes = 10'000'000;
    for (std::uint64_t n = 1;; ++n) {
        partial = log_add(partial, coeff(n));
        const std::uint64_t m = isqrt_u64(n);
        while (head_to < m) {
            ++head_to;
            head = log_add(head, bessel(head_to));
        }
        // sum_{i > n} c_i <= 8 e^(-2u) * S_all * sum_{chi > sqrt(n)} I_chi
        const LogReal tail = log_sub(s_all, head);
        const LogReal rem =
            log_mul(LogReal::from_log(log_scale4_ + kLn2), log_mul(s_all, tail));
        if (rem.is_zero() || rem.log_mag() < partial.log_mag() + log_stop) break;
        if (n >= kMaxModes) throw std::runtime_error("c0_series_sum: no convergence");
    }
    return partial;
}

LogReal OscEngine::c0() const {
    if (c0_cache_) return *c0_cache_;
    // Zero-frequency tuples (j=k or l=m) by inclusion-exclusion:
    // c_0 = 1 - (2q - q^2) = (1 - q)^2 with q = e^(-u) I_0(u).
    const LogReal q = LogReal::from_log(-p_.u + bessel(0).log_mag());
    const LogReal one_minus_q = log_sub(LogReal::one(), q);
    const LogReal closed = log_mul(one_minus_q, one_minus_q);
    const LogReal series = c0_series_sum();
    if (rel_diff(closed, series) > 1e-9)
        throw std::runtime_error("c0: tuple-constraint and mode-sum routes disagree");
    c0_cache_ = closed;
    return closed;
}

double OscEngine::entropy(double t) const {
    const int K = p_.fock_cutoff;
    const double theta = p_.omega * t;
    double purity = 0.0;
    for (int d = 0; d <= K; ++d) {
        const std::complex<double> z = std::polar(1.0, -theta * d);
        std::complex<double> phi = 0.0;
        std::complex<double> zp = 1.0;
        for (int j = 0; j <= K; ++j) {
            phi += weights_[j] * zp;
            zp *= z;
        }
        purity += (d == 0 ? 1.0 : 2.0) * autocorr_[d] * std::norm(phi);
    }
    return std::max(0.0, 1.0 - purity);
}

double OscEngine::entropy_sample(std::int64_t k, std::int64_t m_samples) const {
    if (m_samples < 1) throw std::invalid_argument("entropy_sample: m_samples must be >= 1");
    const std::uint64_t M = static_cast<std::uint64_t>(m_samples);
    const std::uint64_t kk =
        static_cast<std::uint64_t>(((k % m_samples) + m_samples) % m_samples);
    std::vector<double> ct, st;
    detail::fill_trig_tables(M, ct, st);
    return std::max(0.0,
                    1.0 - detail::purity_at_fraction(weights_, autocorr_, kk, M, ct, st));
}

std::vector<double> OscEngine::entropy_period_samples(int m_samples) const {
    if (m_samples < 1) throw std::invalid_argument("entropy_period_samples: m_samples >= 1");
    const std::uint64_t M = static_cast<std::uint64_t>(m_samples);
    std::vector<double> ct, st;
    detail::fill_trig_tables(M, ct, st);
    std::vector<double> out(m_samples);
    for (std::uint64_t k = 0; k < M; ++k)
        out[k] =
            std::max(0.0, 1.0 - detail::purity_at_fraction(weights_, autocorr_, k, M, ct, st));
    return out;
}

double OscEngine::purity_oracle(double t, double omega0) const {
    const int K = p_.fock_cutoff;
    const int dim = K + 1;
    const double lu2 = std::log(p_.u / 2.0);
    std::vector<double> amp(dim);
    for (int j = 0; j < dim; ++j)
        amp[j] = std::exp(-p_.u / 4.0 + 0.5 * (j * lu2 - special::log_factorial(j)));

    // Eigenphase of |j l>: omega0 (j + l + 1) + omega (j + 1/2)(l + 1/2).
    std::vector<std::complex<double>> psi(dim * dim);
    for (int j = 0; j < dim; ++j)
        for (int l = 0; l < dim; ++l) {
            const double theta =
                omega0 * (j + l + 1) + p_.omega * (j + 0.5) * (l + 0.5);
            psi[j * dim + l] = amp[j] * amp[l] * std::polar(1.0, -theta * t);
        }

    double purity = 0.0;
    for (int j = 0; j < dim; ++j)
        for (int jp = 0; jp < dim; ++jp) {
            std::complex<double> rho = 0.0;
            for (int l = 0; l < dim; ++l)
                rho += psi[j * dim + l] * std::conj(psi[jp * dim + l]);
            purity += std::norm(rho);
        }
    return std::max(0.0, 1.0 - purity);
}

LogReal OscEngine::tuple_scan_coeff(std::uint64_t n, int fock_limit) const {
    if (n == 0) throw std::invalid_argument("tuple_scan_coeff: n must be positive");
    if (fock_limit < 1) throw std::invalid_argument("tuple_scan_coeff: fock_limit must be >= 1");
    const std::uint64_t K = static_cast<std::uint64_t>(fock_limit);
    if (n > K)
        throw std::invalid_argument("tuple_scan_coeff: n exceeds fock_limit (mode unreachable)");

    const double lu2 = std::log(p_.u / 2.0);
    std::vector<double> terms;
    for (std::uint64_t mu = 1; mu <= n && mu <= K; ++mu) {
        if (n % mu != 0) continue;
        const std::uint64_t nu = n / mu;
        if (nu > K) continue;
        // j = k + mu, l = m + nu, both capped at the Fock limit
        for (std::uint64_t k = 0; k + mu <= K; ++k) {
            const double part =
                (2.0 * k + mu) * lu2 - special::log_factorial(k) - special::log_factorial(k + mu);
            for (std::uint64_t m = 0; m + nu <= K; ++m)
                terms.push_back(part + (2.0 * m + nu) * lu2 - special::log_factorial(m) -
                                special::log_factorial(m + nu));
        }
    }
    return log_mul(log_sum_positive(terms), LogReal::from_log(log_scale4_));
}

double OscEngine::alias_budget(int m_samples) const {
    if (m_samples < 4) throw std::invalid_argument("alias_budget: m_samples must be >= 4");
    const LogReal s_all = bessel_total();
    const double log_stop = std::log(1e-3);
    const std::uint64_t start = (static_cast<std::uint64_t>(m_samples) + 1) / 2;
    LogReal budget = LogReal::zero();
    LogReal head = LogReal::zero();
    std::uint64_t head_to = 0;
    constexpr std::uint64_t kScanCap = 2'000'000;
    for (std::uint64_t i = start;; ++i) {
        budget = log_add(budget, coeff(i));
        const std::uint64_t m = isqrt_u64(i);
        while (head_to < m) {
            ++head_to;
            head = log_add(head, bessel(head_to));
        }
        const LogReal tail = log_sub(s_all, head);
        const LogReal rem =
            log_mul(LogReal::from_log(log_scale4_ + kLn2), log_mul(s_all, tail));
        if (rem.is_zero() || rem.log_mag() < budget.log_mag() + log_stop)
            return log_add(budget, rem).to_real();
        if (i - start >= kScanCap) throw std::runtime_error("alias_budget: no convergence");
    }
}

}  // namespace entprime
