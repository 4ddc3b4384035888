#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "entprime/numtheory.hpp"

using namespace entprime::numtheory;

namespace {

// Independent trial-division counter, kept free of the sieve path.
std::uint64_t pi_trial_division(std::uint64_t N) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= N; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) ++count;
    }
    return count;
}

}  // namespace

TEST_SUITE("numtheory") {

TEST_CASE("divisors") {
    CHECK(divisors(12).divisors == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7).divisors == std::vector<std::uint64_t>{1, 7});
    CHECK(divisors(1).divisors == std::vector<std::uint64_t>{1});
    CHECK(divisors(36).divisors == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
    CHECK_THROWS_AS(divisors(kMaxN + 1), std::invalid_argument);
}

TEST_CASE("reduced_divisors") {
    CHECK(reduced_divisors(15) == std::vector<std::uint64_t>{3, 5});
    CHECK(reduced_divisors(13).empty());
    CHECK(reduced_divisors(16) == std::vector<std::uint64_t>{2, 4, 8});
    CHECK_THROWS_AS(reduced_divisors(1), std::invalid_argument);
}

TEST_CASE("sieve_classify basics") {
    CHECK(sieve_classify(1).kind == Kind::Unit);
    CHECK(sieve_classify(2).kind == Kind::Prime);
    CHECK(sieve_classify(97).kind == Kind::Prime);

    const auto c14 = sieve_classify(14);
    CHECK(c14.kind == Kind::SemiprimeF2);
    CHECK(c14.family_f2);
    CHECK_FALSE(c14.family_f3);

    const auto c6 = sieve_classify(6);  // the one integer in both families
    CHECK(c6.kind == Kind::SemiprimeF2);
    CHECK(c6.family_f2);
    CHECK(c6.family_f3);

    CHECK(sieve_classify(15).kind == Kind::SemiprimeF3);
    CHECK(sieve_classify(8).kind == Kind::OtherComposite);
    CHECK(sieve_classify(4).kind == Kind::OtherComposite);   // P_n = 2 excluded
    CHECK(sieve_classify(9).kind == Kind::OtherComposite);   // 3*3 excluded
    CHECK(families_string(c6) == "f2;f3");
    CHECK(families_string(sieve_classify(8)).empty());
}

TEST_CASE("six is the unique double-family integer below 1e5") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const auto c = sieve_classify(n);
        if (c.family_f2 && c.family_f3) CHECK(n == 6);
    }
}

TEST_CASE("sieve_pi") {
    CHECK(sieve_pi(10) == 4);
    CHECK(sieve_pi(1) == 0);
    CHECK(sieve_pi(2) == 1);
    CHECK(sieve_pi(10000) == pi_trial_division(10000));
    CHECK(sieve_pi(10000) == 1229);
}

TEST_CASE("product reconstruction over the divisor set") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        for (std::uint64_t mu : divisors(n).divisors) {
            if (mu * mu > n) break;
            CHECK(mu * (n / mu) == n);
        }
    }
}

TEST_CASE("primality iff two divisors") {
    for (std::uint64_t n = 1; n <= 5000; ++n)
        CHECK((sieve_classify(n).kind == Kind::Prime) == (divisors(n).divisors.size() == 2));
}

TEST_CASE("pi increments exactly at primes") {
    const PrimeSieve sieve(2000);
    std::uint64_t prev = 0;
    for (std::uint64_t N = 2; N <= 2000; ++N) {
        const std::uint64_t cur = sieve.pi(N);
        CHECK(cur - prev == (sieve_classify(N).kind == Kind::Prime ? 1u : 0u));
        prev = cur;
    }
}

}  // TEST_SUITE
