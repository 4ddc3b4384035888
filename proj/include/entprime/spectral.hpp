#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "entprime/log_real.hpp"
#include "entprime/oscillator.hpp"
#include "entprime/spin.hpp"

namespace entprime::spectral {

// Uniform samples of an entropy signal over exactly one period T = 2*pi/omega,
// endpoint excluded: values[j] = f(j*T/M).
struct TimeSeries {
    double omega = 1.0;
    int m_samples = 0;
    std::vector<double> values;
};

// Generic sampler for an arbitrary evaluator. For the engines prefer the
// overloads below: they reduce the sample phases in integer arithmetic, so
// discrete orthogonality of the sampled modes holds to machine precision.
TimeSeries sample_period(const std::function<double(double)>& evaluator, double omega,
                         int m_samples);
TimeSeries sample_period(const OscEngine& engine, int m_samples);
TimeSeries sample_period(const SpinEngine& engine, int m_samples);

// Coefficient of cos(n*omega*t): -(2/M) sum_j values[j] cos(2*pi*n*j/M).
// Equals c_n plus the aliasing fold sum_{k>=1} (c_{kM-n} + c_{kM+n}).
// Requires 1 <= n < M/2.
double extract_mode(const TimeSeries& ts, std::uint64_t n);

// DC term (1/M) sum_j values[j]; equals c_0 up to aliasing at multiples of M.
double extract_dc(const TimeSeries& ts);

// Upper bound on the spectral extraction error of every mode below M/2:
// the sum of per-index coefficient bounds at indices >= M/2. The scan runs
// to at least index M and stops after a long run of negligible (or all
// zero) contributions, so exactly-finite spectra report an exact 0.
double alias_budget(const std::function<LogReal(std::uint64_t)>& coeff_bound, int m_samples);

// Smallest power of two M with M > 2*n_max and budget_of_m(M) < target.
int choose_sample_count(const std::function<double(int)>& budget_of_m, std::uint64_t n_max,
                        double target = 1e-10);

}  // namespace entprime::spectral
