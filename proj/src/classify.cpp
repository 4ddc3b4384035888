#include "entprime/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace entprime {

using numtheory::Classification;
using numtheory::Kind;

Classification classify_osc(const OscEngine& engine, std::uint64_t n, const LogReal& c_measured,
                            double tol_rel) {
    if (n == 0) throw std::invalid_argument("classify_osc: n must be positive");
    if (!(tol_rel > 0.0) || !(tol_rel < 1e-2))
        throw std::invalid_argument("classify_osc: tol_rel outside (0, 1e-2)");
    if (c_measured.sign() <= 0)
        throw std::invalid_argument("classify_osc: coefficients are strictly positive");

    Classification c;
    if (n == 1) {
        c.kind = Kind::Unit;
        return c;
    }
    if (rel_agree(c_measured, engine.prime_bound(n), tol_rel)) {
        c.kind = Kind::Prime;
        return c;
    }
    const bool on_f2 =
        n % 2 == 0 && rel_agree(c_measured, engine.family_curve(2, n), tol_rel);
    const bool on_f3 =
        n % 3 == 0 && rel_agree(c_measured, engine.family_curve(3, n), tol_rel);
    // Cube collisions: c_8 = c_8^(f2) and c_27 = c_27^(f3) are exact
    // identities, so curve membership alone cannot certify these two.
    if (on_f2 && n != 8) {
        c.kind = Kind::SemiprimeF2;
        c.family_f2 = true;
        c.family_f3 = on_f3;
        return c;
    }
    if (on_f3 && n != 27) {
        c.kind = Kind::SemiprimeF3;
        c.family_f3 = true;
        return c;
    }
    c.kind = Kind::OtherComposite;
    return c;
}

Classification classify_osc(const OscEngine& engine, std::uint64_t n, double c_measured,
                            double tol_rel) {
    if (c_measured <= 0.0)
        throw std::invalid_argument("classify_osc: coefficients are strictly positive");
    return classify_osc(engine, n, LogReal::from_real(c_measured), tol_rel);
}

SpinVerdict classify_spin(const SpinEngine& engine, std::uint64_t n, const LogReal& cbar_measured,
                          double tol_rel, double tol_abs) {
    if (n < 2) throw std::invalid_argument("classify_spin: n must be >= 2");
    SpinVerdict v;
    v.region = region_of(n, engine.params());
    switch (v.region) {
        case SpinRegion::I: {
            v.decidable = true;
            const bool prime = !cbar_measured.is_zero() && cbar_measured.sign() > 0 &&
                               rel_agree(cbar_measured, engine.prime_bound_region1(n), tol_rel);
            v.cls.kind = prime ? Kind::Prime : Kind::OtherComposite;
            return v;
        }
        case SpinRegion::II: {
            v.decidable = true;
            const bool zero = cbar_measured.is_zero() ||
                              std::fabs(cbar_measured.to_real()) <= tol_abs;
            v.cls.kind = zero ? Kind::Prime : Kind::OtherComposite;
            return v;
        }
        case SpinRegion::III:
        case SpinRegion::IV:
            v.decidable = false;
            v.cls.kind = Kind::OtherComposite;
            return v;
    }
    return v;
}

std::uint64_t prime_count(const OscEngine& engine, std::uint64_t N, double tol_rel) {
    if (N < 2) throw std::invalid_argument("prime_count: N must be >= 2");
    const double log_tol = std::log(tol_rel);
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= N; ++n) {
        const LogReal g = engine.gap(n);
        // zero gap, or negligible against the prime-value scale
        if (g.is_zero() || g.log_mag() - engine.prime_bound(n).log_mag() < log_tol) ++count;
    }
    return count;
}

}  // namespace entprime
