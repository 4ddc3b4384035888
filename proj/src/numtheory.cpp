#include "entprime/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace entprime::numtheory {

DivisorSet divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    if (n > kMaxN) throw std::invalid_argument("divisors: n exceeds 1e9");
    DivisorSet ds;
    ds.n = n;
    std::vector<std::uint64_t> high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ds.divisors.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    ds.divisors.insert(ds.divisors.end(), high.rbegin(), high.rend());
    return ds;
}

std::vector<std::uint64_t> reduced_divisors(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("reduced_divisors: n must be >= 2");
    auto ds = divisors(n).divisors;
    std::vector<std::uint64_t> out;
    out.reserve(ds.size() > 2 ? ds.size() - 2 : 0);
    for (std::uint64_t d : ds)
        if (d != 1 && d != n) out.push_back(d);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

const char* to_string(Kind k) {
    switch (k) {
        case Kind::Unit: return "Unit";
        case Kind::Prime: return "Prime";
        case Kind::SemiprimeF2: return "SemiprimeF2";
        case Kind::SemiprimeF3: return "SemiprimeF3";
        case Kind::OtherComposite: return "OtherComposite";
    }
    return "?";
}

std::string families_string(const Classification& c) {
    if (c.family_f2 && c.family_f3) return "f2;f3";
    if (c.family_f2) return "f2";
    if (c.family_f3) return "f3";
    return "";
}

Classification sieve_classify(std::uint64_t n) {
    Classification c;
    if (n == 1) {
        c.kind = Kind::Unit;
        return c;
    }
    if (is_prime(n)) {
        c.kind = Kind::Prime;
        return c;
    }
    c.family_f2 = (n % 2 == 0) && n / 2 != 2 && is_prime(n / 2);
    c.family_f3 = (n % 3 == 0) && n / 3 != 3 && is_prime(n / 3);
    if (c.family_f2)
        c.kind = Kind::SemiprimeF2;  // 6 carries both flags, f2 wins precedence
    else if (c.family_f3)
        c.kind = Kind::SemiprimeF3;
    else
        c.kind = Kind::OtherComposite;
    return c;
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
    if (limit_ >= 1) composite_[0] = true;
    if (limit_ >= 1) composite_[1] = true;
    for (std::uint64_t p = 2; p * p <= limit_; ++p) {
        if (composite_[p]) continue;
        for (std::uint64_t q = p * p; q <= limit_; q += p) composite_[q] = true;
    }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("PrimeSieve: query beyond limit");
    return n >= 2 && !composite_[n];
}

std::uint64_t PrimeSieve::pi(std::uint64_t N) const {
    if (N > limit_) throw std::out_of_range("PrimeSieve: query beyond limit");
    std::uint64_t count = 0;
    for (std::uint64_t i = 2; i <= N; ++i)
        if (!composite_[i]) ++count;
    return count;
}

std::uint64_t sieve_pi(std::uint64_t N) {
    if (N < 2) return 0;
    return PrimeSieve(N).pi(N);
}

}  // namespace entprime::numtheory
