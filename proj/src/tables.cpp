#include "entprime/tables.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "entprime/version.hpp"

namespace entprime::tables {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// log10 cell of a positive-or-zero LogReal; exact zero prints "-inf".
std::string log10_cell(const LogReal& v) {
    if (v.is_zero()) return "-inf";
    return fmt17(v.log10_mag());
}

json log10_json(const LogReal& v) {
    if (v.is_zero()) return json("-inf");
    return json(v.log10_mag());
}

OscRow make_osc_row(const OscEngine& engine, std::uint64_t n, double tol_rel) {
    OscRow r;
    r.n = n;
    r.c_n = engine.coeff(n);
    r.prime_bound = engine.prime_bound(n);
    if (n % 2 == 0) r.f2_curve = engine.family_curve(2, n);
    if (n % 3 == 0) r.f3_curve = engine.family_curve(3, n);
    r.gap = engine.gap(n);
    r.cls = classify_osc(engine, n, r.c_n, tol_rel);
    return r;
}

}  // namespace

OscTable build_osc_table(const OscEngine& engine, std::uint64_t n_max, double tol_rel,
                         int workers) {
    if (n_max < 2) throw std::invalid_argument("build_osc_table: n_max must be >= 2");
    engine.ensure_bessel(n_max);

    OscTable t;
    t.params = engine.params();
    t.tol_rel = tol_rel;
    t.rows.resize(n_max - 1);

    if (workers <= 1) {
        for (std::uint64_t n = 2; n <= n_max; ++n)
            t.rows[n - 2] = make_osc_row(engine, n, tol_rel);
        return t;
    }

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::uint64_t n = 2 + static_cast<std::uint64_t>(w); n <= n_max;
                 n += static_cast<std::uint64_t>(workers))
                t.rows[n - 2] = make_osc_row(engine, n, tol_rel);
        });
    for (auto& th : pool) th.join();
    return t;
}

SpinTable build_spin_table(const SpinEngine& engine, double tol_rel) {
    SpinTable t;
    t.params = engine.params();
    t.tol_rel = tol_rel;
    const std::uint64_t n_max = engine.mode_limit() + 10;
    t.rows.reserve(n_max - 1);
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        SpinRow r;
        r.n = n;
        r.region = region_of(n, engine.params());
        r.cbar = engine.coeff(n);
        if (r.region == SpinRegion::I) r.region1_bound = engine.prime_bound_region1(n);
        r.verdict = classify_spin(engine, n, r.cbar, tol_rel);
        t.rows.push_back(r);
    }
    return t;
}

std::string to_csv(const OscTable& t) {
    std::string out =
        "n,log10_c_n,log10_prime_bound,log10_f2_curve,log10_f3_curve,log10_gap,kind,families\n";
    for (const OscRow& r : t.rows) {
        out += std::to_string(r.n);
        out += ',';
        out += log10_cell(r.c_n);
        out += ',';
        out += log10_cell(r.prime_bound);
        out += ',';
        if (r.f2_curve) out += log10_cell(*r.f2_curve);
        out += ',';
        if (r.f3_curve) out += log10_cell(*r.f3_curve);
        out += ',';
        out += log10_cell(r.gap);
        out += ',';
        out += numtheory::to_string(r.cls.kind);
        out += ',';
        out += numtheory::families_string(r.cls);
        out += '\n';
    }
    return out;
}

std::string to_json(const OscTable& t) {
    json doc;
    doc["meta"] = {{"system", "osc"},
                   {"u", t.params.u},
                   {"omega", t.params.omega},
                   {"tolerances", {{"series_eps", t.params.series_eps}, {"tol_rel", t.tol_rel}}},
                   {"artifact_version", kVersion}};
    json rows = json::array();
    for (const OscRow& r : t.rows) {
        json row;
        row["n"] = r.n;
        row["log10_c_n"] = log10_json(r.c_n);
        row["log10_prime_bound"] = log10_json(r.prime_bound);
        row["log10_f2_curve"] = r.f2_curve ? log10_json(*r.f2_curve) : json(nullptr);
        row["log10_f3_curve"] = r.f3_curve ? log10_json(*r.f3_curve) : json(nullptr);
        row["log10_gap"] = log10_json(r.gap);
        row["kind"] = numtheory::to_string(r.cls.kind);
        row["families"] = numtheory::families_string(r.cls);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string to_csv(const SpinTable& t) {
    std::string out = "n,region,log10_cbar,log10_region1_bound,kind\n";
    for (const SpinRow& r : t.rows) {
        out += std::to_string(r.n);
        out += ',';
        out += to_string(r.region);
        out += ',';
        out += log10_cell(r.cbar);
        out += ',';
        if (r.region1_bound) out += log10_cell(*r.region1_bound);
        out += ',';
        out += r.verdict.decidable ? numtheory::to_string(r.verdict.cls.kind) : "NotDecidable";
        out += '\n';
    }
    return out;
}

std::string to_json(const SpinTable& t) {
    json doc;
    doc["meta"] = {{"system", "spin"},
                   {"twoS", t.params.twoS},
                   {"u", t.params.u},
                   {"omega", t.params.omega},
                   {"tolerances", {{"tol_rel", t.tol_rel}}},
                   {"artifact_version", kVersion}};
    json rows = json::array();
    for (const SpinRow& r : t.rows) {
        json row;
        row["n"] = r.n;
        row["region"] = to_string(r.region);
        row["log10_cbar"] = log10_json(r.cbar);
        row["log10_region1_bound"] =
            r.region1_bound ? log10_json(*r.region1_bound) : json(nullptr);
        row["kind"] =
            r.verdict.decidable ? numtheory::to_string(r.verdict.cls.kind) : "NotDecidable";
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string to_csv(const EntropySeries& s) {
    std::string out = "t_over_T,S_L\n";
    const int M = s.ts.m_samples;
    for (int j = 0; j < M; ++j) {
        out += fmt17(static_cast<double>(j) / static_cast<double>(M));
        out += ',';
        out += fmt17(s.ts.values[j]);
        out += '\n';
    }
    return out;
}

std::string to_json(const EntropySeries& s) {
    json doc;
    doc["meta"] = {{"system", s.system},
                   {"u", s.u},
                   {"omega", s.ts.omega},
                   {"m_samples", s.ts.m_samples},
                   {"artifact_version", kVersion}};
    if (s.twoS > 0) doc["meta"]["twoS"] = s.twoS;
    json rows = json::array();
    const int M = s.ts.m_samples;
    for (int j = 0; j < M; ++j)
        rows.push_back({{"t_over_T", static_cast<double>(j) / static_cast<double>(M)},
                        {"S_L", s.ts.values[j]}});
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        if (!std::cout) throw std::runtime_error("write_output: stdout write failed");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_output: cannot open " + path);
    f << content;
    if (!f) throw std::runtime_error("write_output: write failed for " + path);
}

}  // namespace entprime::tables
