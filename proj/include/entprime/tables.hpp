#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entprime/classify.hpp"
#include "entprime/numtheory.hpp"
#include "entprime/oscillator.hpp"
#include "entprime/spectral.hpp"
#include "entprime/spin.hpp"

namespace entprime::tables {

// One oscillator mode: coefficient, bounds, family curves where defined
// (q | n), structural gap, and the analytic verdict.
struct OscRow {
    std::uint64_t n = 0;
    LogReal c_n;
    LogReal prime_bound;
    std::optional<LogReal> f2_curve;
    std::optional<LogReal> f3_curve;
    LogReal gap;
    numtheory::Classification cls;
};

struct OscTable {
    OscParams params;
    double tol_rel = kAnalyticTolRel;
    std::vector<OscRow> rows;  // n = 2..n_max
};

// Rows are independent per n; `workers` > 1 fans the build out over threads
// against a pre-filled engine and assembles in n order, so output is
// byte-identical for any worker count.
OscTable build_osc_table(const OscEngine& engine, std::uint64_t n_max,
                         double tol_rel = kAnalyticTolRel, int workers = 1);

struct SpinRow {
    std::uint64_t n = 0;
    SpinRegion region = SpinRegion::IV;
    LogReal cbar;
    std::optional<LogReal> region1_bound;
    SpinVerdict verdict;
};

struct SpinTable {
    SpinParams params;
    double tol_rel = kAnalyticTolRel;
    std::vector<SpinRow> rows;  // n = 2..4S^2+10
};

SpinTable build_spin_table(const SpinEngine& engine, double tol_rel = kAnalyticTolRel);

struct EntropySeries {
    std::string system;  // "osc" | "spin"
    double u = 0.0;
    int twoS = 0;  // 0 for the oscillator
    spectral::TimeSeries ts;
};

// CSV: header row, comma separators, '.' decimal, LF line ends, doubles as
// %.17g (round-trip exact), exact zeros as "-inf", inapplicable cells empty.
// JSON: single object {"meta": {...}, "rows": [...]} with fields named
// exactly like the CSV columns; exact zeros as the string "-inf",
// inapplicable cells null.
std::string to_csv(const OscTable& t);
std::string to_json(const OscTable& t);
std::string to_csv(const SpinTable& t);
std::string to_json(const SpinTable& t);
std::string to_csv(const EntropySeries& s);
std::string to_json(const EntropySeries& s);

// Writes content to path ("-" = stdout). Throws std::runtime_error on I/O
// failure.
void write_output(const std::string& path, const std::string& content);

}  // namespace entprime::tables
