#pragma once

#include <cstdint>

#include "entprime/log_real.hpp"
#include "entprime/numtheory.hpp"
#include "entprime/oscillator.hpp"
#include "entprime/spin.hpp"

namespace entprime {

// Default verdict tolerances. Composite relative gaps are bounded below by
// ~1e-1 in every tested regime, leaving >= 1e3 separation from either value.
inline constexpr double kAnalyticTolRel = 1e-6;
inline constexpr double kSpectralTolRel = 1e-4;

// Absolute floor for the region-II zero test on analytic inputs: a prime
// mode there is an exact empty sum, composites sit many orders above.
inline constexpr double kSpinRegion2AbsFloor = 1e-30;

// Oscillator verdict from a coefficient value (analytic or measured):
// compare against the prime bound, then against the family curves for
// q | n. The cube collisions n = 8 (f2) and n = 27 (f3) sit exactly on
// their curves and are forced to OtherComposite by rule, not tolerance.
// Throws std::invalid_argument for n = 0 or a non-positive coefficient.
numtheory::Classification classify_osc(const OscEngine& engine, std::uint64_t n,
                                       const LogReal& c_measured,
                                       double tol_rel = kAnalyticTolRel);
numtheory::Classification classify_osc(const OscEngine& engine, std::uint64_t n,
                                       double c_measured, double tol_rel = kAnalyticTolRel);

// Spin verdict. Region I: prime iff the value matches the region-I prime
// bound. Region II: prime iff the value is zero (below tol_abs). Regions
// III and IV are not decidable; composites report OtherComposite (the spin
// system resolves no semiprime families).
struct SpinVerdict {
    bool decidable = false;
    SpinRegion region = SpinRegion::IV;
    numtheory::Classification cls;
};

SpinVerdict classify_spin(const SpinEngine& engine, std::uint64_t n, const LogReal& cbar_measured,
                          double tol_rel = kAnalyticTolRel,
                          double tol_abs = kSpinRegion2AbsFloor);

// #{2 <= n <= N : gap(n) within tol_rel of zero}. The gap is structural,
// so this counts exact zero elements.
std::uint64_t prime_count(const OscEngine& engine, std::uint64_t N,
                          double tol_rel = kAnalyticTolRel);

}  // namespace entprime
