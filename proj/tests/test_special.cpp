#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "entprime/log_real.hpp"
#include "entprime/special.hpp"

using namespace entprime;
using special::bessel_i_log;
using special::g_poly_log;
using special::log_binomial;
using special::log_factorial;

namespace {

// Independent reference: the defining series in long double, fixed term count.
long double bessel_series_ref(unsigned chi, long double w, int terms = 40) {
    long double sum = 0.0L;
    for (int k = 0; k < terms; ++k) {
        long double term = std::pow(w / 2.0L, 2.0L * k + chi);
        for (int i = 1; i <= k; ++i) term /= i;
        for (int i = 1; i <= static_cast<int>(chi) + k; ++i) term /= i;
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("log_factorial against lgamma") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
    for (std::uint64_t n : {std::uint64_t{100}, std::uint64_t{10000}, std::uint64_t{200000}})
        CHECK(log_factorial(n) == doctest::Approx(std::lgamma(double(n) + 1.0)).epsilon(1e-14));
}

TEST_CASE("log_binomial: exact small values, consistent large path") {
    CHECK(std::exp(log_binomial(10, 5)) == doctest::Approx(252.0).epsilon(1e-14));
    CHECK(std::exp(log_binomial(2, 1)) == doctest::Approx(2.0).epsilon(1e-15));
    // across the exact/log-factorial boundary
    const double exact = log_binomial(67, 33);
    const double viafact = log_factorial(67) - log_factorial(33) - log_factorial(34);
    CHECK(exact == doctest::Approx(viafact).epsilon(1e-13));
    CHECK_THROWS_AS(log_binomial(5, 6), std::invalid_argument);
}

TEST_CASE("bessel: w -> 0+ limits") {
    // chi = 0: only the k = 0 term survives, I_0 -> 1
    CHECK(std::fabs(bessel_i_log(0, 1e-8).log_mag()) <= 1e-15);
    // chi = 3: leading term dominates
    const double expect = 3.0 * std::log(0.5e-8) - log_factorial(3);
    CHECK(bessel_i_log(3, 1e-8).log_mag() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("bessel: I_1(1) against the series oracle") {
    // frozen from the 40-term extended-precision series
    const double kI1 = 0.56515910399248502721;
    const LogReal got = bessel_i_log(1, 1.0);
    CHECK(got.to_real() == doctest::Approx(kI1).epsilon(1e-14));
    CHECK(got.to_real() ==
          doctest::Approx(static_cast<double>(bessel_series_ref(1, 1.0L))).epsilon(1e-14));
}

TEST_CASE("bessel: three-term recurrence at (chi, w) = (5, 10)") {
    const LogReal im1 = bessel_i_log(4, 10.0);
    const LogReal ip1 = bessel_i_log(6, 10.0);
    const LogReal ic = bessel_i_log(5, 10.0);
    // I_4 - I_6 = (2*5/10) I_5 = I_5
    CHECK(rel_diff(log_sub(im1, ip1), ic) <= 1e-10);
}

TEST_CASE("bessel: argument validation") {
    CHECK_THROWS_AS(bessel_i_log(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i_log(1, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i_log(1, 1.0, 1e-5), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i_log(1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("bessel: strict monotonicity in chi") {
    for (double w : {1.0, 10.0, 1000.0}) {
        double prev = bessel_i_log(0, w).log_mag();
        for (unsigned chi = 1; chi <= 200; ++chi) {
            const double cur = bessel_i_log(chi, w).log_mag();
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("bessel: stopping rule self-consistency across eps") {
    for (unsigned chi : {0u, 3u, 17u, 120u}) {
        for (double w : {0.5, 4.0, 300.0}) {
            const LogReal loose = bessel_i_log(chi, w, 1e-7);
            const LogReal tight = bessel_i_log(chi, w, 1e-16);
            CHECK(rel_diff(loose, tight) <= 1e-7);
        }
    }
}

TEST_CASE("g_poly: single-term and empty-sum edges") {
    // chi = twoS: single term w^{2S}
    for (double w : {0.5, 1.0, 3.0})
        CHECK(g_poly_log(4, 4, w).log_mag() == doctest::Approx(4.0 * std::log(w)).epsilon(1e-14));
    CHECK(g_poly_log(5, 4, 1.0).is_zero());
    CHECK(g_poly_log(1, 2, 1.0).to_real() == doctest::Approx(4.0).epsilon(1e-14));
    CHECK_THROWS_AS(g_poly_log(1, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g_poly_log(1, 2, 0.0), std::invalid_argument);
}

TEST_CASE("g_poly: reverse-order evaluation agrees") {
    for (unsigned twoS : {6u, 41u, 120u}) {
        for (unsigned chi : {0u, 1u, 5u}) {
            for (double w : {0.5, 2.0}) {
                LogReal rev = LogReal::zero();
                for (int k = static_cast<int>(twoS - chi); k >= 0; --k) {
                    const double t = log_binomial(twoS, k) + log_binomial(twoS, k + chi) +
                                     (2.0 * k + chi) * std::log(w);
                    rev = log_add(rev, LogReal::from_log(t));
                }
                CHECK(rel_diff(g_poly_log(chi, twoS, w), rev) <= 1e-13);
            }
        }
    }
}

}  // TEST_SUITE
