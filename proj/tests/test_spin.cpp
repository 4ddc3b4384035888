#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "entprime/numtheory.hpp"
#include "entprime/spin.hpp"

using namespace entprime;

namespace {
// u = 1 makes every spin value an exact dyadic; frozen from the
// 30-digit brute-force quadruple sum.
constexpr double kCbar5_S6 = 0.0045318603515625;
constexpr double kCbar4_S6 = 0.0833437442779541015625;
constexpr double kCbar6_S6 = 0.0523052215576171875;
constexpr double kC0_S6 = 0.59971714019775390625;
}  // namespace

TEST_SUITE("spin") {

TEST_CASE("region boundaries") {
    const SpinParams sp{.twoS = 6, .u = 1.0};
    CHECK(region_of(5, sp) == SpinRegion::I);
    CHECK(region_of(6, sp) == SpinRegion::I);
    CHECK(region_of(7, sp) == SpinRegion::II);
    CHECK(region_of(12, sp) == SpinRegion::II);
    CHECK(region_of(13, sp) == SpinRegion::III);
    CHECK(region_of(36, sp) == SpinRegion::III);
    CHECK(region_of(37, sp) == SpinRegion::IV);
    CHECK_THROWS_AS(region_of(1, sp), std::invalid_argument);
}

TEST_CASE("lambda_bar constrained divisor sets") {
    const SpinParams sp6{.twoS = 6, .u = 1.0};
    CHECK(lambda_bar_set(6, sp6, 0, 0) == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(lambda_bar_set(6, sp6, 4, 0) == std::vector<std::uint64_t>{1, 2});
    const SpinParams sp3{.twoS = 3, .u = 1.0};
    for (int k = 0; k <= 2; ++k)
        for (int m = 0; m <= 2; ++m) CHECK(lambda_bar_set(7, sp3, k, m).empty());
    CHECK_THROWS_AS(lambda_bar_set(6, sp6, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_bar_set(6, sp6, 0, -1), std::invalid_argument);
}

TEST_CASE("coefficients: mode support and structural zeros") {
    const SpinEngine s1({.twoS = 1, .u = 1.0});
    CHECK(s1.mode_limit() == 1);
    for (std::uint64_t n = 2; n <= 20; ++n) CHECK(s1.coeff(n).is_zero());
    CHECK_FALSE(s1.coeff(1).is_zero());

    const SpinEngine s6({.twoS = 6, .u = 1.0});
    CHECK(s6.coeff(7).is_zero());   // prime in region II
    CHECK(s6.coeff(11).is_zero());
    CHECK_FALSE(s6.coeff(8).is_zero());
    CHECK_THROWS_AS(s6.coeff(0), std::invalid_argument);
}

TEST_CASE("frozen dyadic values at twoS = 6, u = 1") {
    const SpinEngine eng({.twoS = 6, .u = 1.0});
    CHECK(eng.coeff(5).to_real() == doctest::Approx(kCbar5_S6).epsilon(1e-13));
    CHECK(eng.coeff(4).to_real() == doctest::Approx(kCbar4_S6).epsilon(1e-13));
    CHECK(eng.coeff(6).to_real() == doctest::Approx(kCbar6_S6).epsilon(1e-13));
    CHECK(eng.c0().to_real() == doctest::Approx(kC0_S6).epsilon(1e-13));
}

TEST_CASE("region-I bound, gap and decomposition") {
    const SpinEngine eng({.twoS = 6, .u = 1.0});
    // n = twoS: G_n collapses to the single term u^{2S}
    const double single = eng.g_poly(6).log_mag();
    CHECK(single == doctest::Approx(6.0 * std::log(1.0)).epsilon(1e-13));

    CHECK(rel_diff(eng.coeff(5), eng.prime_bound_region1(5)) <= 1e-13);  // 5 prime
    CHECK(eng.gap_region1(5).is_zero());
    CHECK(eng.gap_region1(3).is_zero());
    CHECK(eng.gap_region1(4).sign() == +1);  // mu = 2 admissible at k = m = 0

    // decomposition cbar = bound + gap
    const LogReal sum = log_add(eng.prime_bound_region1(6), eng.gap_region1(6));
    CHECK(rel_diff(eng.coeff(6), sum) <= 1e-12);

    CHECK_THROWS_AS(eng.prime_bound_region1(7), std::invalid_argument);
    CHECK_THROWS_AS(eng.prime_bound_region1(1), std::invalid_argument);
    CHECK_THROWS_AS(eng.gap_region1(7), std::invalid_argument);
}

TEST_CASE("tuple scan: hand-enumerated value and mutual agreement") {
    const SpinEngine s2({.twoS = 2, .u = 1.0});
    // single tuple (j,k,l,m) = (2,0,2,0): 4 * (1+u)^-8 * u^4 = 4/256
    CHECK(s2.tuple_scan(4).to_real() == doctest::Approx(0.015625).epsilon(1e-14));
    CHECK(s2.tuple_scan(5).is_zero());  // beyond 4S^2

    const SpinEngine s6({.twoS = 6, .u = 0.5});
    const auto all = s6.tuple_scan_all();
    for (std::uint64_t n = 1; n <= s6.mode_limit(); ++n) {
        const LogReal a = s6.coeff(n);
        CHECK(a.is_zero() == all[n].is_zero());
        if (!a.is_zero()) CHECK(rel_diff(a, all[n]) <= 1e-13);
        CHECK(rel_diff(s6.tuple_scan(n), all[n]) <= 1e-13);
    }
}

TEST_CASE("sum rule: c0 equals the finite mode sum") {
    for (int twoS : {3, 6, 10}) {
        const SpinEngine eng({.twoS = twoS, .u = 1.0});
        LogReal acc = LogReal::zero();
        for (std::uint64_t n = 1; n <= eng.mode_limit(); ++n) acc = log_add(acc, eng.coeff(n));
        CHECK(rel_diff(eng.c0(), acc) <= 1e-12);
    }
}

TEST_CASE("entropy: separability, periodicity, oracle agreement") {
    const SpinEngine eng({.twoS = 8, .u = 1.0});
    CHECK(eng.entropy(0.0) <= 1e-12);
    CHECK(eng.entropy(eng.period()) <= 1e-12);
    CHECK(eng.purity_oracle(0.0) <= 1e-12);

    const double t3 = eng.period() / 3.0;
    CHECK(std::fabs(eng.entropy(t3) - eng.purity_oracle(t3)) <= 1e-12);
    for (double t : {0.21, 1.7, 4.4}) {
        CHECK(std::fabs(eng.entropy(t) - eng.purity_oracle(t)) <= 1e-12);
        CHECK(std::fabs(eng.purity_oracle(t, 0.0) - eng.purity_oracle(t, 2.7)) <= 1e-12);
    }
    // range cap 1 - 1/(2S+1)
    for (int j = 0; j < 64; ++j) {
        const double s = eng.entropy_sample(j, 64);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0 - 1.0 / 9.0 + 1e-12);
    }
}

TEST_CASE("half-integer spin (odd twoS) uses the same integer bookkeeping") {
    const SpinEngine eng({.twoS = 5, .u = 1.0});  // S = 5/2
    CHECK(eng.mode_limit() == 25);
    CHECK(eng.entropy(0.0) <= 1e-12);
    for (double t : {0.4, 1.9, 5.1}) {
        CHECK(std::fabs(eng.entropy(t) - eng.purity_oracle(t)) <= 1e-12);
        CHECK(std::fabs(eng.purity_oracle(t, 0.0) - eng.purity_oracle(t, 2.7)) <= 1e-12);
    }
    const auto scan = eng.tuple_scan_all();
    for (std::uint64_t n = 1; n <= eng.mode_limit(); ++n) {
        CHECK(eng.coeff(n).is_zero() == scan[n].is_zero());
        if (!scan[n].is_zero()) CHECK(rel_diff(eng.coeff(n), scan[n]) <= 1e-13);
    }
    // region boundaries at odd twoS: I ends at 5, II at 10, III at 25
    const SpinParams sp{.twoS = 5, .u = 1.0};
    CHECK(region_of(5, sp) == SpinRegion::I);
    CHECK(region_of(6, sp) == SpinRegion::II);
    CHECK(region_of(10, sp) == SpinRegion::II);
    CHECK(region_of(11, sp) == SpinRegion::III);
    CHECK(region_of(26, sp) == SpinRegion::IV);
}

TEST_CASE("region II iff-characterization at twoS = 10") {
    const SpinEngine eng({.twoS = 10, .u = 1.0});
    for (std::uint64_t n = 11; n <= 20; ++n)
        CHECK(eng.coeff(n).is_zero() == numtheory::is_prime(n));
}

TEST_CASE("region I iff-characterization up to twoS = 120 across u") {
    for (double u : {0.5, 1.0, 2.0}) {
        const SpinEngine eng({.twoS = 120, .u = u});
        for (std::uint64_t n = 2; n <= 120; ++n)
            CHECK(eng.gap_region1(n).is_zero() == numtheory::is_prime(n));
    }
}

TEST_CASE("region I decomposition holds across the region at twoS = 60") {
    const SpinEngine eng({.twoS = 60, .u = 1.0});
    for (std::uint64_t n = 2; n <= 60; ++n) {
        const LogReal sum = log_add(eng.prime_bound_region1(n), eng.gap_region1(n));
        CHECK(rel_diff(eng.coeff(n), sum) <= 1e-12);
    }
}

TEST_CASE("region III carries a vanishing composite at twoS = 12") {
    const SpinEngine eng({.twoS = 12, .u = 1.0});
    bool found = false;
    std::uint64_t witness = 0;
    for (std::uint64_t n = 25; n <= eng.mode_limit(); ++n)
        if (!numtheory::is_prime(n) && eng.coeff(n).is_zero()) {
            found = true;
            witness = n;
            break;
        }
    CHECK(found);
    CHECK(witness == 26);  // 2 * 13: no divisor pair fits inside [1, 2S]
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SpinEngine({.twoS = 0, .u = 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SpinEngine({.twoS = 4, .u = 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(SpinEngine({.twoS = 4, .u = 1.0, .omega = 0.0}), std::invalid_argument);
}

}  // TEST_SUITE
