#include "entprime/spin.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "entprime/numtheory.hpp"
#include "entprime/special.hpp"
#include "period_sampling.hpp"

namespace entprime {

namespace {
constexpr double kLn2 = 0.6931471805599453094;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double stable_log_add(double acc, double t) {
    if (acc == -std::numeric_limits<double>::infinity()) return t;
    return t >= acc ? t + std::log1p(std::exp(acc - t)) : acc + std::log1p(std::exp(t - acc));
}
}  // namespace

const char* to_string(SpinRegion r) {
    switch (r) {
        case SpinRegion::I: return "I";
        case SpinRegion::II: return "II";
        case SpinRegion::III: return "III";
        case SpinRegion::IV: return "IV";
    }
    return "?";
}

SpinRegion region_of(std::uint64_t n, const SpinParams& sp) {
    if (n < 2) throw std::invalid_argument("region_of: n must be >= 2");
    const std::uint64_t twoS = static_cast<std::uint64_t>(sp.twoS);
    if (n <= twoS) return SpinRegion::I;
    if (n <= 2 * twoS) return SpinRegion::II;
    if (n <= twoS * twoS) return SpinRegion::III;
    return SpinRegion::IV;
}

std::vector<std::uint64_t> lambda_bar_set(std::uint64_t n, const SpinParams& sp, int k, int m) {
    if (n == 0) throw std::invalid_argument("lambda_bar_set: n must be positive");
    if (k < 0 || m < 0 || k > sp.twoS - 1 || m > sp.twoS - 1)
        throw std::invalid_argument("lambda_bar_set: k, m must lie in [0, 2S-1]");
    const std::uint64_t mu_cap = static_cast<std::uint64_t>(sp.twoS - k);
    const std::uint64_t nu_cap = static_cast<std::uint64_t>(sp.twoS - m);
    std::vector<std::uint64_t> out;
    for (std::uint64_t mu : numtheory::divisors(n).divisors)
        if (mu <= mu_cap && n / mu <= nu_cap) out.push_back(mu);
    return out;
}

SpinEngine::SpinEngine(SpinParams sp) : p_(sp) {
    if (p_.twoS < 1) throw std::invalid_argument("SpinEngine: twoS must be >= 1");
    if (!(p_.u > 0.0)) throw std::invalid_argument("SpinEngine: u must be positive");
    if (!(p_.omega > 0.0)) throw std::invalid_argument("SpinEngine: omega must be positive");

    const int twoS = p_.twoS;
    log_norm8_ = -4.0 * twoS * std::log1p(p_.u);
    log_choose_.resize(twoS + 1);
    for (int k = 0; k <= twoS; ++k) log_choose_[k] = special::log_binomial(twoS, k);

    g_.resize(twoS + 1);
    for (int chi = 0; chi <= twoS; ++chi) g_[chi] = special::g_poly_log(chi, twoS, p_.u);

    const double lu = std::log(p_.u);
    weights_.resize(twoS + 1);
    for (int l = 0; l <= twoS; ++l)
        weights_[l] = std::exp(log_choose_[l] + l * lu - twoS * std::log1p(p_.u));
    autocorr_.resize(twoS + 1);
    for (int d = 0; d <= twoS; ++d) {
        double a = 0.0;
        for (int l = 0; l + d <= twoS; ++l) a += weights_[l] * weights_[l + d];
        autocorr_[d] = a;
    }
}

double SpinEngine::period() const { return kTwoPi / p_.omega; }

std::uint64_t SpinEngine::mode_limit() const {
    return static_cast<std::uint64_t>(p_.twoS) * static_cast<std::uint64_t>(p_.twoS);
}

LogReal SpinEngine::g_poly(std::uint64_t chi) const {
    if (chi > static_cast<std::uint64_t>(p_.twoS)) return LogReal::zero();
    return g_[chi];
}

LogReal SpinEngine::divisor_sum(std::uint64_t n, bool reduced) const {
    const std::uint64_t twoS = static_cast<std::uint64_t>(p_.twoS);
    std::vector<double> terms;
    for (std::uint64_t mu : numtheory::divisors(n).divisors) {
        if (reduced && (mu == 1 || mu == n)) continue;
        const std::uint64_t nu = n / mu;
        if (mu > twoS || nu > twoS) continue;
        terms.push_back(g_[mu].log_mag() + g_[nu].log_mag());
    }
    if (terms.empty()) return LogReal::zero();
    return log_mul(log_sum_positive(terms), LogReal::from_log(2.0 * kLn2 + log_norm8_));
}

LogReal SpinEngine::coeff(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("spin coeff: n must be positive");
    if (n > mode_limit()) return LogReal::zero();
    return divisor_sum(n, false);
}

LogReal SpinEngine::prime_bound_region1(std::uint64_t n) const {
    if (n < 2 || n > static_cast<std::uint64_t>(p_.twoS))
        throw std::invalid_argument("prime_bound_region1: n outside region I");
    return LogReal::from_log(3.0 * kLn2 + log_norm8_ + g_[1].log_mag() + g_[n].log_mag());
}

LogReal SpinEngine::gap_region1(std::uint64_t n) const {
    if (n < 2 || n > static_cast<std::uint64_t>(p_.twoS))
        throw std::invalid_argument("gap_region1: n outside region I");
    return divisor_sum(n, true);
}

LogReal SpinEngine::c0() const {
    const LogReal qbar =
        log_mul(g_[0], LogReal::from_log(-2.0 * p_.twoS * std::log1p(p_.u)));
    const LogReal one_minus = log_sub(LogReal::one(), qbar);
    return log_mul(one_minus, one_minus);
}

double SpinEngine::entropy(double t) const {
    const int twoS = p_.twoS;
    const double theta = p_.omega * t;
    double purity = 0.0;
    for (int d = 0; d <= twoS; ++d) {
        const std::complex<double> z = std::polar(1.0, -theta * d);
        std::complex<double> phi = 0.0;
        std::complex<double> zp = 1.0;
        for (int j = 0; j <= twoS; ++j) {
            phi += weights_[j] * zp;
            zp *= z;
        }
        purity += (d == 0 ? 1.0 : 2.0) * autocorr_[d] * std::norm(phi);
    }
    return std::max(0.0, 1.0 - purity);
}

double SpinEngine::entropy_sample(std::int64_t k, std::int64_t m_samples) const {
    if (m_samples < 1) throw std::invalid_argument("entropy_sample: m_samples must be >= 1");
    const std::uint64_t M = static_cast<std::uint64_t>(m_samples);
    const std::uint64_t kk =
        static_cast<std::uint64_t>(((k % m_samples) + m_samples) % m_samples);
    std::vector<double> ct, st;
    detail::fill_trig_tables(M, ct, st);
    return std::max(0.0,
                    1.0 - detail::purity_at_fraction(weights_, autocorr_, kk, M, ct, st));
}

std::vector<double> SpinEngine::entropy_period_samples(int m_samples) const {
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

double SpinEngine::purity_oracle(double t, double omega0) const {
    const int twoS = p_.twoS;
    const int dim = twoS + 1;
    const double ls = 0.5 * std::log(p_.u);  // s = sqrt(u), real
    std::vector<double> amp(dim);
    for (int na = 0; na < dim; ++na)
        amp[na] = std::exp(0.5 * log_choose_[na] + na * ls - 0.5 * twoS * std::log1p(p_.u));

    const double S = 0.5 * twoS;
    std::vector<std::complex<double>> psi(dim * dim);
    for (int na = 0; na < dim; ++na)
        for (int nb = 0; nb < dim; ++nb) {
            const double ma = na - S, mb = nb - S;
            const double theta = omega0 * (ma + mb) + p_.omega * ma * mb;
            psi[na * dim + nb] = amp[na] * amp[nb] * std::polar(1.0, -theta * t);
        }

    double purity = 0.0;
    for (int a = 0; a < dim; ++a)
        for (int ap = 0; ap < dim; ++ap) {
            std::complex<double> rho = 0.0;
            for (int b = 0; b < dim; ++b)
                rho += psi[a * dim + b] * std::conj(psi[ap * dim + b]);
            purity += std::norm(rho);
        }
    return std::max(0.0, 1.0 - purity);
}

LogReal SpinEngine::tuple_scan(std::uint64_t n) const {
    const int twoS = p_.twoS;
    const double lu = std::log(p_.u);
    double acc = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (int k = 0; k <= twoS - 1; ++k)
        for (int j = k + 1; j <= twoS; ++j)
            for (int m = 0; m <= twoS - 1; ++m)
                for (int l = m + 1; l <= twoS; ++l) {
                    if (static_cast<std::uint64_t>(j - k) * static_cast<std::uint64_t>(l - m) != n)
                        continue;
                    const double t_log = log_choose_[j] + log_choose_[k] + log_choose_[l] +
                                         log_choose_[m] + (j + k + l + m) * lu + log_norm8_;
                    acc = stable_log_add(acc, t_log);
                    any = true;
                }
    if (!any) return LogReal::zero();
    return LogReal::from_log(acc + 2.0 * kLn2);
}

std::vector<LogReal> SpinEngine::tuple_scan_all() const {
    const int twoS = p_.twoS;
    const double lu = std::log(p_.u);
    const std::uint64_t nmax = mode_limit();
    std::vector<double> acc(nmax + 1, -std::numeric_limits<double>::infinity());
    for (int k = 0; k <= twoS - 1; ++k)
        for (int j = k + 1; j <= twoS; ++j)
            for (int m = 0; m <= twoS - 1; ++m)
                for (int l = m + 1; l <= twoS; ++l) {
                    const std::uint64_t prod =
                        static_cast<std::uint64_t>(j - k) * static_cast<std::uint64_t>(l - m);
                    const double t_log = log_choose_[j] + log_choose_[k] + log_choose_[l] +
                                         log_choose_[m] + (j + k + l + m) * lu + log_norm8_;
                    acc[prod] = stable_log_add(acc[prod], t_log);
                }
    std::vector<LogReal> out(nmax + 1, LogReal::zero());
    for (std::uint64_t n = 1; n <= nmax; ++n)
        if (acc[n] != -std::numeric_limits<double>::infinity())
            out[n] = LogReal::from_log(acc[n] + 2.0 * kLn2);
    return out;
}

double SpinEngine::alias_budget(int m_samples) const {
    if (m_samples < 4) throw std::invalid_argument("alias_budget: m_samples must be >= 4");
    const std::uint64_t start = (static_cast<std::uint64_t>(m_samples) + 1) / 2;
    LogReal budget = LogReal::zero();
    for (std::uint64_t i = start; i <= mode_limit(); ++i)
        budget = log_add(budget, coeff(i));
    return budget.to_real();
}

}  // namespace entprime
