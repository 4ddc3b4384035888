#include "entprime/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "entprime/classify.hpp"
#include "entprime/numtheory.hpp"
#include "entprime/oscillator.hpp"
#include "entprime/spectral.hpp"
#include "entprime/spin.hpp"

namespace entprime::selftest {

namespace {

struct Runner {
    std::ostream& out;
    bool all_ok = true;

    void check(const std::string& name, const std::function<bool()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        out << (ok ? "[ ok ] " : "[FAIL] ") << name << " (" << ms << " ms)" << note << "\n";
        all_ok = all_ok && ok;
    }
};

bool prime_and_composite_laws(std::uint64_t n_max, const std::vector<double>& us) {
    const numtheory::PrimeSieve sieve(n_max);
    for (double u : us) {
        const OscEngine eng({.u = u});
        for (std::uint64_t n = 2; n <= n_max; ++n) {
            const LogReal g = eng.gap(n);
            if (sieve.is_prime(n)) {
                if (!g.is_zero()) return false;
            } else {
                if (g.sign() != +1) return false;
                const double rel =
                    std::exp(eng.coeff(n).log_mag() - eng.prime_bound(n).log_mag()) - 1.0;
                if (!(rel > 1e-3)) return false;
            }
        }
    }
    return true;
}

bool oracle_triangle(std::uint64_t n_max, int fock_limit, double u) {
    const OscEngine eng({.u = u});
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (rel_diff(eng.tuple_scan_coeff(n, fock_limit), eng.coeff(n)) > 1e-10) return false;
    const int M = spectral::choose_sample_count([&](int m) { return eng.alias_budget(m); },
                                                n_max, 1e-14);
    const auto ts = spectral::sample_period(eng, M);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const LogReal cn = eng.coeff(n);
        if (cn.to_real() <= 1e-8) continue;
        if (std::fabs(spectral::extract_mode(ts, n) / cn.to_real() - 1.0) > 1e-6) return false;
    }
    return true;
}

bool simulation_equivalence(int samples) {
    std::mt19937 rng(20240311);
    const OscEngine osc({.u = 1.0, .fock_cutoff = 40});
    std::uniform_real_distribution<double> dist(0.0, osc.period());
    for (int i = 0; i < samples; ++i) {
        const double t = dist(rng);
        if (std::fabs(osc.entropy(t) - osc.purity_oracle(t)) > 1e-10) return false;
        if (std::fabs(osc.purity_oracle(t) - osc.purity_oracle(t, 7.3)) > 1e-10) return false;
    }
    const SpinEngine spin({.twoS = 8, .u = 1.0});
    for (int i = 0; i < samples; ++i) {
        const double t = dist(rng);
        if (std::fabs(spin.entropy(t) - spin.purity_oracle(t)) > 1e-12) return false;
        if (std::fabs(spin.purity_oracle(t) - spin.purity_oracle(t, 2.7)) > 1e-12) return false;
    }
    return true;
}

bool spin_exact_equivalence(const std::vector<int>& twoS_list) {
    for (int twoS : twoS_list) {
        const SpinEngine eng({.twoS = twoS, .u = 1.0});
        const auto scan = eng.tuple_scan_all();
        for (std::uint64_t n = 1; n <= eng.mode_limit(); ++n) {
            const LogReal a = eng.coeff(n);
            const LogReal b = scan[n];
            if (a.is_zero() != b.is_zero()) return false;
            if (!a.is_zero() && rel_diff(a, b) > 1e-12) return false;
        }
    }
    return true;
}

bool region_laws(int twoS) {
    const SpinParams sp{.twoS = twoS, .u = 1.0};
    const SpinEngine eng(sp);
    const numtheory::PrimeSieve sieve(4 * static_cast<std::uint64_t>(twoS));
    for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(twoS); ++n)
        if (eng.gap_region1(n).is_zero() != sieve.is_prime(n)) return false;
    for (std::uint64_t n = twoS + 1; n <= 2 * static_cast<std::uint64_t>(twoS); ++n)
        if (eng.coeff(n).is_zero() != sieve.is_prime(n)) return false;
    for (std::uint64_t n = eng.mode_limit() + 1; n <= eng.mode_limit() + 50; ++n)
        if (!eng.coeff(n).is_zero()) return false;
    // region III non-identifiability witness at twoS = 12
    const SpinEngine small({.twoS = 12, .u = 1.0});
    bool witness = false;
    for (std::uint64_t n = 2 * 12 + 1; n <= small.mode_limit(); ++n)
        if (!numtheory::is_prime(n) && small.coeff(n).is_zero()) witness = true;
    return witness;
}

bool sum_rules() {
    const OscEngine osc({.u = 1.0});
    if (rel_diff(osc.c0(), osc.c0_series_sum()) > 1e-10) return false;
    const SpinEngine spin({.twoS = 10, .u = 1.0});
    LogReal acc = LogReal::zero();
    for (std::uint64_t n = 1; n <= spin.mode_limit(); ++n) acc = log_add(acc, spin.coeff(n));
    if (rel_diff(spin.c0(), acc) > 1e-12) return false;
    const SpinEngine spin8({.twoS = 8, .u = 1.0});
    return osc.entropy(0.0) <= 1e-12 && osc.purity_oracle(0.0) <= 1e-12 &&
           spin8.entropy(0.0) <= 1e-12 && spin8.purity_oracle(0.0) <= 1e-12;
}

bool family_ledger(std::uint64_t n_max) {
    const OscEngine eng({.u = 1.0});
    eng.ensure_bessel(n_max);
    const numtheory::PrimeSieve sieve(n_max);
    for (std::uint64_t q : {std::uint64_t{2}, std::uint64_t{3}}) {
        for (std::uint64_t n = q; n <= n_max; n += q) {
            const LogReal c = eng.coeff(n);
            const LogReal curve = eng.family_curve(static_cast<int>(q), n);
            const bool member = n / q != q && n % q == 0 && sieve.is_prime(n / q) && n / q > 1;
            const bool collision = n == q * q * q;
            const bool below = n == q || n == q * q;
            if (member || collision) {
                if (rel_diff(c, curve) > 1e-11) return false;
            } else if (below) {
                if (!(c.log_mag() < curve.log_mag())) return false;
            } else {
                if (!(c.log_mag() > curve.log_mag())) return false;
            }
        }
    }
    return true;
}

bool counting(std::uint64_t N, double u) {
    const OscEngine eng({.u = u});
    return prime_count(eng, N) == numtheory::sieve_pi(N);
}

bool classification_e2e(std::uint64_t n_max, double u) {
    const OscEngine eng({.u = u});
    eng.ensure_bessel(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto got = classify_osc(eng, n, eng.coeff(n));
        if (got.kind != numtheory::sieve_classify(n).kind) return false;
    }
    return true;
}

bool classification_spectral() {
    const OscEngine eng({.u = 40.0});
    const int M = spectral::choose_sample_count([&](int m) { return eng.alias_budget(m); }, 30);
    const auto ts = spectral::sample_period(eng, M);
    for (std::uint64_t n = 2; n <= 30; ++n) {
        const auto got = classify_osc(eng, n, spectral::extract_mode(ts, n), kSpectralTolRel);
        if (got.kind != numtheory::sieve_classify(n).kind) return false;
    }
    return true;
}

}  // namespace

bool run(Level level, std::ostream& out) {
    const bool full = level == Level::Full;
    Runner r{out};

    r.check("prime-equality and composite-bound laws", [&] {
        return prime_and_composite_laws(full ? 10000 : 2000, {1.0, 1000.0});
    });
    r.check("oracle triangle (divisor sum / tuple scan / spectral)", [&] {
        return oracle_triangle(full ? 60 : 40, full ? 128 : 64, 1.0);
    });
    r.check("simulation equivalence (factorized vs purity oracle)",
            [&] { return simulation_equivalence(full ? 16 : 8); });
    r.check("spin exact-sum equivalence (coeff vs tuple scan)", [&] {
        return spin_exact_equivalence(full ? std::vector<int>{4, 10, 20}
                                           : std::vector<int>{4, 6, 10});
    });
    r.check("spin region laws", [&] { return region_laws(full ? 60 : 30); });
    r.check("sum rules and separability at t = 0", [&] { return sum_rules(); });
    r.check("family curve ledger", [&] { return family_ledger(full ? 10000 : 2000); });
    r.check("prime counting vs sieve",
            [&] { return counting(full ? 10000 : 1000, 1000.0); });
    r.check("end-to-end classification vs sieve",
            [&] { return classification_e2e(full ? 10000 : 2000, 1000.0); });
    if (full)
        r.check("spectral-input classification (u = 40, n <= 30)",
                [&] { return classification_spectral(); });

    out << (r.all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES present\n");
    return r.all_ok;
}

}  // namespace entprime::selftest
