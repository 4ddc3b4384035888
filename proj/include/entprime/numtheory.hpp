#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entprime::numtheory {

// All distinct positive divisors of n, ascending. 1 and n are always
// members; |divisors| == 2 iff n is prime, == 1 iff n == 1.
struct DivisorSet {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> divisors;
};

inline constexpr std::uint64_t kMaxN = 1'000'000'000;

// Trial division up to sqrt(n). Throws std::invalid_argument for n == 0
// or n > 1e9.
DivisorSet divisors(std::uint64_t n);

// Divisor set with 1 and n removed; empty iff n is prime. Requires n >= 2.
std::vector<std::uint64_t> reduced_divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

enum class Kind { Unit, Prime, SemiprimeF2, SemiprimeF3, OtherComposite };

const char* to_string(Kind k);

// kind == Unit iff n == 1; kind == Prime implies no families.
// family_f2: n = 2p with p an odd prime. family_f3: n = 3p with p prime,
// p != 3. n = 6 is the unique integer carrying both; its kind reports
// SemiprimeF2 by precedence while both family flags stay set.
struct Classification {
    Kind kind = Kind::Unit;
    bool family_f2 = false;
    bool family_f3 = false;

    bool operator==(const Classification&) const = default;
};

// "", "f2", "f3" or "f2;f3"
std::string families_string(const Classification& c);

// Reference classification from integer arithmetic alone.
Classification sieve_classify(std::uint64_t n);

// Number of primes <= N, by sieve of Eratosthenes.
std::uint64_t sieve_pi(std::uint64_t N);

// Reusable Eratosthenes bitmap for bulk queries.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit);
    bool is_prime(std::uint64_t n) const;
    std::uint64_t pi(std::uint64_t N) const;
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::vector<bool> composite_;
};

}  // namespace entprime::numtheory
