#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "entprime/tables.hpp"

using namespace entprime;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        rows.push_back(cells);
    }
    return rows;
}

// A numeric cell is equal across formats when the CSV %.17g text parses to
// the same double the JSON number carries.
bool cell_matches(const std::string& csv_cell, const json& j) {
    if (csv_cell == "-inf") return j.is_string() && j.get<std::string>() == "-inf";
    if (csv_cell.empty()) return j.is_null();
    if (j.is_string()) return csv_cell == j.get<std::string>();
    return std::strtod(csv_cell.c_str(), nullptr) == j.get<double>();
}

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("oscillator table: structure, sentinels, cross-format equality") {
    const OscEngine eng({.u = 1.0});
    const auto table = tables::build_osc_table(eng, 40);
    REQUIRE(table.rows.size() == 39);

    const std::string csv = tables::to_csv(table);
    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 40);
    CHECK(rows[0] == std::vector<std::string>{"n", "log10_c_n", "log10_prime_bound",
                                              "log10_f2_curve", "log10_f3_curve", "log10_gap",
                                              "kind", "families"});

    const json doc = json::parse(tables::to_json(table));
    CHECK(doc["meta"]["system"] == "osc");
    CHECK(doc["meta"]["u"] == 1.0);
    CHECK(doc["meta"]["artifact_version"].is_string());
    CHECK(doc["meta"]["tolerances"]["tol_rel"] == table.tol_rel);
    REQUIRE(doc["rows"].size() == 39);

    const char* cols[] = {"log10_c_n", "log10_prime_bound", "log10_f2_curve",
                          "log10_f3_curve", "log10_gap"};
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        const auto& csv_row = rows[i + 1];
        const json& jr = doc["rows"][i];
        CHECK(std::to_string(r.n) == csv_row[0]);
        CHECK(jr["n"] == r.n);
        for (int c = 0; c < 5; ++c) CHECK(cell_matches(csv_row[c + 1], jr[cols[c]]));
        CHECK(csv_row[6] == jr["kind"].get<std::string>());
        CHECK(csv_row[7] == jr["families"].get<std::string>());
        // prime rows: structural zero gap prints the "-inf" sentinel
        if (csv_row[6] == "Prime") CHECK(csv_row[5] == "-inf");
        // curve columns only where q | n
        CHECK((r.n % 2 == 0) == !csv_row[3].empty());
        CHECK((r.n % 3 == 0) == !csv_row[4].empty());
    }
}

TEST_CASE("JSON round trip reproduces the classification") {
    const OscEngine eng({.u = 1.0});
    const auto table = tables::build_osc_table(eng, 60);
    const json doc = json::parse(tables::to_json(table));
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(doc["rows"][i]["kind"].get<std::string>() ==
              numtheory::to_string(table.rows[i].cls.kind));
        CHECK(doc["rows"][i]["families"].get<std::string>() ==
              numtheory::families_string(table.rows[i].cls));
    }
}

TEST_CASE("table build is byte-identical for any worker count") {
    const OscEngine eng({.u = 1.0});
    eng.ensure_bessel(120);
    const auto t1 = tables::build_osc_table(eng, 120, kAnalyticTolRel, 1);
    const auto t4 = tables::build_osc_table(eng, 120, kAnalyticTolRel, 4);
    CHECK(tables::to_csv(t1) == tables::to_csv(t4));
    CHECK(tables::to_json(t1) == tables::to_json(t4));
    const auto t1b = tables::build_osc_table(eng, 120, kAnalyticTolRel, 1);
    CHECK(tables::to_csv(t1) == tables::to_csv(t1b));  // repeated builds identical
}

TEST_CASE("spin table: regions, sentinels, cross-format equality") {
    const SpinEngine eng({.twoS = 12, .u = 1.0});
    const auto table = tables::build_spin_table(eng);
    REQUIRE(table.rows.size() == 144 + 10 - 1);

    const auto rows = parse_csv(tables::to_csv(table));
    const json doc = json::parse(tables::to_json(table));
    CHECK(doc["meta"]["system"] == "spin");
    CHECK(doc["meta"]["twoS"] == 12);

    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        const auto& csv_row = rows[i + 1];
        const json& jr = doc["rows"][i];
        CHECK(csv_row[1] == jr["region"].get<std::string>());
        CHECK(cell_matches(csv_row[2], jr["log10_cbar"]));
        CHECK(cell_matches(csv_row[3], jr["log10_region1_bound"]));
        CHECK(csv_row[4] == jr["kind"].get<std::string>());
        CHECK((r.region == SpinRegion::I) == !csv_row[3].empty());
        if (r.region == SpinRegion::III || r.region == SpinRegion::IV)
            CHECK(csv_row[4] == "NotDecidable");
        // regions I and II decide primality; the spin system resolves no
        // semiprime families, so compare against the sieve on prime-vs-not
        if (r.region == SpinRegion::I || r.region == SpinRegion::II) {
            const bool prime = numtheory::sieve_classify(r.n).kind == numtheory::Kind::Prime;
            CHECK(csv_row[4] == (prime ? "Prime" : "OtherComposite"));
        }
    }
}

TEST_CASE("spin table at twoS = 1: every mode beyond 1 is the zero sentinel") {
    const SpinEngine eng({.twoS = 1, .u = 1.0});
    const auto rows = parse_csv(tables::to_csv(tables::build_spin_table(eng)));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][2] == "-inf");
}

TEST_CASE("entropy series output") {
    const OscEngine eng({.u = 1.0});
    tables::EntropySeries s{"osc", 1.0, 0, spectral::sample_period(eng, 8)};
    const auto rows = parse_csv(tables::to_csv(s));
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == std::vector<std::string>{"t_over_T", "S_L"});
    CHECK(std::strtod(rows[1][0].c_str(), nullptr) == 0.0);
    CHECK(std::strtod(rows[1][1].c_str(), nullptr) <= 1e-12);  // separability at t = 0
    const json doc = json::parse(tables::to_json(s));
    CHECK(doc["rows"].size() == 8);
    CHECK(doc["meta"]["m_samples"] == 8);
}

}  // TEST_SUITE
