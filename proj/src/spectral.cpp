#include "entprime/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entprime::spectral {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_samples(int m_samples) {
    if (m_samples < 3) throw std::invalid_argument("sample_period: m_samples must be >= 3");
}

void check_range(double v) {
    if (!(v >= 0.0) || !(v < 1.0))
        throw std::domain_error("sample_period: entropy sample outside [0, 1)");
}
}  // namespace

TimeSeries sample_period(const std::function<double(double)>& evaluator, double omega,
                         int m_samples) {
    check_samples(m_samples);
    if (!(omega > 0.0)) throw std::invalid_argument("sample_period: omega must be positive");
    TimeSeries ts{omega, m_samples, {}};
    ts.values.reserve(m_samples);
    const double T = kTwoPi / omega;
    for (int j = 0; j < m_samples; ++j) {
        const double v = evaluator(static_cast<double>(j) * T / m_samples);
        check_range(v);
        ts.values.push_back(v);
    }
    return ts;
}

TimeSeries sample_period(const OscEngine& engine, int m_samples) {
    check_samples(m_samples);
    TimeSeries ts{engine.params().omega, m_samples, engine.entropy_period_samples(m_samples)};
    for (double v : ts.values) check_range(v);
    return ts;
}

TimeSeries sample_period(const SpinEngine& engine, int m_samples) {
    check_samples(m_samples);
    TimeSeries ts{engine.params().omega, m_samples, engine.entropy_period_samples(m_samples)};
    for (double v : ts.values) check_range(v);
    return ts;
}

double extract_mode(const TimeSeries& ts, std::uint64_t n) {
    const std::uint64_t M = static_cast<std::uint64_t>(ts.m_samples);
    if (n < 1 || 2 * n >= M)
        throw std::invalid_argument("extract_mode: n must satisfy 1 <= n < M/2");
    double acc = 0.0;
    std::uint64_t r = 0;
    for (std::uint64_t j = 0; j < M; ++j) {
        acc += ts.values[j] * std::cos(kTwoPi * static_cast<double>(r) / static_cast<double>(M));
        r += n;
        if (r >= M) r -= M;
    }
    return -2.0 * acc / static_cast<double>(M);
}

double extract_dc(const TimeSeries& ts) {
    if (ts.m_samples < 1) throw std::invalid_argument("extract_dc: empty series");
    double acc = 0.0;
    for (double v : ts.values) acc += v;
    return acc / static_cast<double>(ts.m_samples);
}

double alias_budget(const std::function<LogReal(std::uint64_t)>& coeff_bound, int m_samples) {
    if (m_samples < 4) throw std::invalid_argument("alias_budget: m_samples must be >= 4");
    const std::uint64_t M = static_cast<std::uint64_t>(m_samples);
    const std::uint64_t start = (M + 1) / 2;
    constexpr int kQuietRun = 256;        // indices in a row below threshold before stopping
    constexpr double kQuietRel = 1e-8;
    constexpr std::uint64_t kScanCap = 4'000'000;

    LogReal budget = LogReal::zero();
    int quiet = 0;
    for (std::uint64_t i = start; i - start < kScanCap; ++i) {
        const LogReal b = coeff_bound(i);
        if (b.sign() < 0) throw std::domain_error("alias_budget: negative coefficient bound");
        const bool negligible =
            b.is_zero() ||
            (!budget.is_zero() && b.log_mag() < budget.log_mag() + std::log(kQuietRel));
        budget = log_add(budget, b);
        quiet = negligible ? quiet + 1 : 0;
        if (quiet >= kQuietRun && i >= M) return budget.to_real();
    }
    throw std::runtime_error("alias_budget: coefficient tail did not settle");
}

int choose_sample_count(const std::function<double(int)>& budget_of_m, std::uint64_t n_max,
                        double target) {
    int M = 8;
    while (static_cast<std::uint64_t>(M) <= 2 * n_max) M *= 2;
    constexpr int kCap = 1 << 22;
    for (; M <= kCap; M *= 2)
        if (budget_of_m(M) < target) return M;
    throw std::runtime_error("choose_sample_count: no sample count meets the alias target");
}

}  // namespace entprime::spectral
