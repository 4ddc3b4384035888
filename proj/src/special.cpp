#include "entprime/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace entprime::special {

namespace {

constexpr std::size_t kLogFactTableSize = 1u << 17;

// Cumulative ln(k!) in long double keeps the random-walk drift of the
// running sum below one double ulp across the whole table.
const std::vector<double>& log_fact_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogFactTableSize);
        long double acc = 0.0L;
        t[0] = 0.0;
        for (std::size_t k = 1; k < kLogFactTableSize; ++k) {
            acc += std::log(static_cast<long double>(k));
            t[k] = static_cast<double>(acc);
        }
        return t;
    }();
    return table;
}

// Largest n with every C(n, k) representable in 64 bits (C(67,33) < 2^64).
constexpr std::uint64_t kExactBinomialMaxN = 67;

const std::vector<std::uint64_t>& pascal_table() {
    static const std::vector<std::uint64_t> table = [] {
        const std::size_t rows = kExactBinomialMaxN + 1;
        std::vector<std::uint64_t> t(rows * rows, 0);
        for (std::size_t n = 0; n < rows; ++n) {
            t[n * rows] = 1;
            for (std::size_t k = 1; k <= n; ++k)
                t[n * rows + k] = t[(n - 1) * rows + k - 1] +
                                  (k <= n - 1 ? t[(n - 1) * rows + k] : 0);
        }
        return t;
    }();
    return table;
}

}  // namespace

double log_factorial(std::uint64_t n) {
    const auto& table = log_fact_table();
    if (n < table.size()) return table[n];
    return static_cast<double>(std::lgamma(static_cast<long double>(n) + 1.0L));
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("log_binomial: k > n");
    if (n <= kExactBinomialMaxN) {
        const std::size_t rows = kExactBinomialMaxN + 1;
        return std::log(static_cast<double>(pascal_table()[n * rows + k]));
    }
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

LogReal bessel_i_log(std::uint64_t chi, double w, double eps) {
    if (!(w > 0.0)) throw std::invalid_argument("bessel_i_log: w must be positive");
    if (!(eps > 0.0) || !(eps < 1e-6))
        throw std::invalid_argument("bessel_i_log: eps outside (0, 1e-6)");

    const double lw2 = std::log(w / 2.0);
    const double chid = static_cast<double>(chi);
    const double k_peak = 0.5 * (-chid + std::sqrt(chid * chid + w * w));
    const double log_eps = std::log(eps);

    LogReal sum = LogReal::zero();
    constexpr std::uint64_t kMaxTerms = 100'000'000;
    for (std::uint64_t k = 0;; ++k) {
        const double t_log = (2.0 * static_cast<double>(k) + chid) * lw2 -
                             log_factorial(k) - log_factorial(chi + k);
        sum = log_add(sum, LogReal::from_log(t_log));
        if (static_cast<double>(k) >= k_peak && t_log < sum.log_mag() + log_eps) {
            // Past the peak the term ratio r = (w/2)^2 / ((k+1)(chi+k+1))
            // strictly decreases, so the remaining tail is below
            // t * r / (1 - r); stop only once that bound is inside eps.
            const double r = (w / 2.0) * (w / 2.0) /
                             (static_cast<double>(k + 1) * static_cast<double>(chi + k + 1));
            if (r < 1.0 &&
                t_log + std::log(r) - std::log1p(-r) < sum.log_mag() + log_eps)
                break;
        }
        if (k >= kMaxTerms) throw std::runtime_error("bessel_i_log: series did not converge");
    }
    return sum;
}

LogReal g_poly_log(std::uint64_t chi, std::uint64_t twoS, double w) {
    if (twoS < 1) throw std::invalid_argument("g_poly_log: twoS must be >= 1");
    if (!(w > 0.0)) throw std::invalid_argument("g_poly_log: w must be positive");
    if (chi > twoS) return LogReal::zero();  // empty summation range

    const double lw = std::log(w);
    LogReal sum = LogReal::zero();
    for (std::uint64_t k = 0; k + chi <= twoS; ++k) {
        const double t_log = log_binomial(twoS, k) + log_binomial(twoS, k + chi) +
                             (2.0 * static_cast<double>(k) + static_cast<double>(chi)) * lw;
        sum = log_add(sum, LogReal::from_log(t_log));
    }
    return sum;
}

}  // namespace entprime::special
