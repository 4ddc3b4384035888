#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace entprime {

// Signed log-magnitude real: value = sign * exp(log_mag).
//
// Every coefficient in this library is a sum of positive terms spanning
// hundreds of orders of magnitude (e.g. e^(-2u) I_1(u) I_n(u) at u = 1e3),
// so all series arithmetic is carried in the log domain. sign == 0 is the
// exact zero element; log_mag is meaningless then. log_mag saturates at
// +/-DBL_MAX like any double; at this library's scales (|log_mag| < ~1e6)
// saturation is unreachable.
class LogReal {
public:
    constexpr LogReal() = default;

    static constexpr LogReal zero() { return LogReal(); }
    static constexpr LogReal one() { return from_log(0.0); }

    // value = sign * exp(log_mag), sign in {-1, +1}
    static constexpr LogReal from_log(double log_mag, int sign = +1) {
        LogReal r;
        r.log_mag_ = log_mag;
        r.sign_ = sign < 0 ? -1 : +1;
        return r;
    }

    static LogReal from_real(double x) {
        if (x == 0.0) return zero();
        return from_log(std::log(std::fabs(x)), x > 0.0 ? +1 : -1);
    }

    // Underflows to 0 / overflows to +-inf when log_mag leaves double range.
    double to_real() const {
        if (sign_ == 0) return 0.0;
        return static_cast<double>(sign_) * std::exp(log_mag_);
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    // Natural log of |value|; call only when sign() != 0.
    double log_mag() const { return log_mag_; }
    double log10_mag() const { return log_mag_ / kLn10; }

    LogReal operator-() const {
        if (sign_ == 0) return *this;
        return from_log(log_mag_, -sign_);
    }

    // Magnitude comparison helper (|a| < |b|), zeros sort first.
    static bool mag_less(const LogReal& a, const LogReal& b) {
        if (a.sign_ == 0) return b.sign_ != 0;
        if (b.sign_ == 0) return false;
        return a.log_mag_ < b.log_mag_;
    }

private:
    static constexpr double kLn10 = 2.302585092994045684;
    double log_mag_ = 0.0;
    std::int8_t sign_ = 0;
};

// Opposite-sign magnitudes within this relative difference cancel to the
// exact zero element, so structural identities (prime gaps) stay at zero
// instead of rounding dust.
inline constexpr double kCancellationEps = 1e-14;

inline LogReal log_mul(const LogReal& a, const LogReal& b) {
    if (a.is_zero() || b.is_zero()) return LogReal::zero();
    return LogReal::from_log(a.log_mag() + b.log_mag(), a.sign() * b.sign());
}

// Stable a + b: max + log1p(+-exp(min - max)).
inline LogReal log_add(const LogReal& a, const LogReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogReal& hi = LogReal::mag_less(a, b) ? b : a;
    const LogReal& lo = LogReal::mag_less(a, b) ? a : b;
    const double d = lo.log_mag() - hi.log_mag();  // <= 0
    if (hi.sign() == lo.sign())
        return LogReal::from_log(hi.log_mag() + std::log1p(std::exp(d)), hi.sign());
    if (d > -kCancellationEps) return LogReal::zero();
    // log(1 - e^d) through expm1: stable for |d| near zero as well
    return LogReal::from_log(hi.log_mag() + std::log(-std::expm1(d)), hi.sign());
}

inline LogReal log_sub(const LogReal& a, const LogReal& b) { return log_add(a, -b); }

inline LogReal operator*(const LogReal& a, const LogReal& b) { return log_mul(a, b); }
inline LogReal operator+(const LogReal& a, const LogReal& b) { return log_add(a, b); }
inline LogReal operator-(const LogReal& a, const LogReal& b) { return log_sub(a, b); }

// Ascending-magnitude fold: most accurate order for all-positive series.
inline LogReal log_sum(std::vector<LogReal> terms) {
    std::sort(terms.begin(), terms.end(), LogReal::mag_less);
    LogReal acc = LogReal::zero();
    for (const LogReal& t : terms) acc = log_add(acc, t);
    return acc;
}

// Ascending fold over raw natural-log magnitudes of positive terms.
// Same math as log_sum on all-positive input, without the struct overhead
// in hot series loops.
inline LogReal log_sum_positive(std::vector<double>& term_logs) {
    if (term_logs.empty()) return LogReal::zero();
    std::sort(term_logs.begin(), term_logs.end());
    double acc = term_logs.front();
    for (std::size_t i = 1; i < term_logs.size(); ++i) {
        const double t = term_logs[i];
        acc = t >= acc ? t + std::log1p(std::exp(acc - t))
                       : acc + std::log1p(std::exp(t - acc));
    }
    return LogReal::from_log(acc);
}

// |a - b| / max(|a|, |b|); 0 when both are the zero element.
inline double rel_diff(const LogReal& a, const LogReal& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    if (a.is_zero() || b.is_zero()) return 1.0;
    if (a.sign() != b.sign()) return 2.0;
    const double d = a.log_mag() - b.log_mag();
    return std::fabs(std::expm1(-std::fabs(d)));
}

inline bool rel_agree(const LogReal& a, const LogReal& b, double tol_rel) {
    return rel_diff(a, b) <= tol_rel;
}

}  // namespace entprime
