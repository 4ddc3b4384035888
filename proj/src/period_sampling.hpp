#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace entprime::detail {

inline constexpr double kSampleTwoPi = 2.0 * std::numbers::pi;

// Purity of the factorized entropy form at the rational time t = (k/M) T.
// Phases are reduced as (k*j*d) mod M in integers, so uniformly sampled
// grids keep exact discrete orthogonality.
inline double purity_at_fraction(const std::vector<double>& weights,
                                 const std::vector<double>& autocorr, std::uint64_t k,
                                 std::uint64_t M, const std::vector<double>& ct,
                                 const std::vector<double>& st) {
    const std::size_t dim = weights.size();
    double purity = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
        double re = 0.0, im = 0.0;
        const std::uint64_t step = k * static_cast<std::uint64_t>(d) % M;
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            re += weights[j] * ct[r];
            im -= weights[j] * st[r];
            r += step;
            if (r >= M) r -= M;
        }
        purity += (d == 0 ? 1.0 : 2.0) * autocorr[d] * (re * re + im * im);
    }
    return purity;
}

inline void fill_trig_tables(std::uint64_t M, std::vector<double>& ct, std::vector<double>& st) {
    ct.resize(M);
    st.resize(M);
    for (std::uint64_t r = 0; r < M; ++r) {
        ct[r] = std::cos(kSampleTwoPi * static_cast<double>(r) / static_cast<double>(M));
        st[r] = std::sin(kSampleTwoPi * static_cast<double>(r) / static_cast<double>(M));
    }
}

}  // namespace entprime::detail
