// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hilbzeta/io.hpp"
#include "hilbzeta/verify.hpp"
#include "hilbzeta/zeta.hpp"

#include "reference_tables.hpp"

using namespace hilbzeta;

namespace {

// Wall-clock bounds in milliseconds.
constexpr std::int64_t tables_ms = 1000;
constexpr std::int64_t census_ms = 30000;
constexpr std::int64_t values_ms = 60000;
constexpr std::int64_t oracle_ms = 300000;
constexpr std::int64_t oracle_sharded_ms = 60000;
constexpr int oracle_shards = 8;

constexpr int table_rows = 12;      // tables 1-4
constexpr int value_columns = 18;   // tables 6-7

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
std::int64_t timed_ms(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return ms_since(t0);
}

void absorb(Outcome& o, const Report& r) {
    for (const auto& c : r)
        if (!c.pass) o.fail(format_line(c));
}

void within(Outcome& o, std::int64_t elapsed, std::int64_t bound, const std::string& what) {
    if (elapsed >= bound) o.fail(what + " took " + std::to_string(elapsed) + " ms, bound " + std::to_string(bound) + " ms");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\n") - a + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t from = 0;
    for (std::size_t p; (p = s.find(sep, from)) != std::string::npos; from = p + sep.size()) out.push_back(s.substr(from, p - from));
    out.push_back(s.substr(from));
    return out;
}

/// Typeset rows with continuation lines folded into the row that carries the label.
std::vector<std::vector<std::string>> reference_rows(int id) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> pending;
    for (const auto& line : split(reference::table_bodies().at(id), "\\\\")) {
        if (trim(line).empty()) continue;
        auto cells = split(line, "&");
        for (auto& c : cells) c = trim(c);
        if (cells.front().empty()) {
            pending.resize(std::max(pending.size(), cells.size()));
            for (std::size_t i = 0; i < cells.size(); ++i) pending[i] += cells[i];
            continue;
        }
        for (std::size_t i = 0; i < pending.size() && i < cells.size(); ++i) cells[i] = pending[i] + cells[i];
        pending.clear();
        rows.push_back(cells);
    }
    return rows;
}

void compare_table(Outcome& o, int id, int max_n) {
    const Table t = make_table(id, max_n);
    const auto ref = reference_rows(id);
    std::vector<std::string> mismatches;
    if (ref.size() != t.rows.size()) {
        o.fail("table " + std::to_string(id) + ": " + std::to_string(t.rows.size()) + " rows, expected " + std::to_string(ref.size()));
        return;
    }
    for (std::size_t r = 0; r < ref.size(); ++r) {
        if (ref[r].size() != t.rows[r].size()) {
            o.fail("table " + std::to_string(id) + " row " + std::to_string(r + 1) + ": column count differs");
            return;
        }
        for (std::size_t c = 0; c < ref[r].size(); ++c)
            if (normalize_cell(ref[r][c]) != normalize_cell(t.rows[r][c].text))
                mismatches.push_back(std::to_string(id) + ":" + ref[r][0] + "/" + t.columns[c] + " got " + t.rows[r][c].text + ", expected " + ref[r][c]);
    }
    if (!mismatches.empty()) {
        std::string all;
        for (const auto& m : mismatches) all += (all.empty() ? "" : "; ") + m;
        o.fail("table " + std::to_string(id) + ", " + std::to_string(mismatches.size()) + " cell(s) differ: " + all);
    }
}

Outcome tables() {
    Outcome o;
    const auto elapsed = timed_ms([&] {
        for (int id = 1; id <= 4; ++id) {
            compare_table(o, id, table_rows);
            for (auto fmt : {OutputFormat::plain, OutputFormat::csv, OutputFormat::json})
                if (render_table(make_table(id, table_rows), fmt).empty()) o.fail("empty rendering of table " + std::to_string(id));
        }
    });
    within(o, elapsed, tables_ms, "tables 1-4");
    o.detail = o.pass ? "tables 1-4, n <= 12, " + std::to_string(elapsed) + " ms" : o.detail;
    return o;
}

Outcome zeta_displays() {
    // Typeset numerator and denominator of Z(t) for n = 3, 5, 6.
    const std::vector<std::tuple<int, std::string, std::string>> shown = {
        {3, "(1-qt)(1-q^2t)(1-q^4t)(1-q^5t)", "(1-t)(1-q^3t)^2(1-q^6t)"},
        {5, "(1-qt)(1-q^3t)(1-q^7t)(1-q^9t)", "(1-t)(1-q^4t)(1-q^6t)(1-q^{10}t)"},
        {6, "(1-qt)(1-q^6t)^2(1-q^{11}t)", "(1-t)(1-q^5t)(1-q^7t)(1-q^{12}t)"},
    };
    Outcome o;
    for (const auto& [n, num, den] : shown) {
        const std::string display = normalize_cell(num + "/(" + den + ")");
        const auto z = zeta_factorization(n);
        if (parse_zeta_display(n, display) != z) o.fail("n = " + std::to_string(n) + ": exponents differ from " + display);
        if (render_zeta(z) != display) o.fail("n = " + std::to_string(n) + ": rendered " + render_zeta(z));
    }
    if (o.pass) o.detail = "n = 3, 5, 6";
    return o;
}

Outcome census(const VerifyOptions& opt) {
    Outcome o;
    Report r;
    const auto elapsed = timed_ms([&] { r = census_suite(opt); });
    absorb(o, r);
    within(o, elapsed, census_ms, "census");
    if (o.pass) o.detail = "n <= " + std::to_string(opt.census_n) + ", " + std::to_string(r.size()) + " checks, " + std::to_string(elapsed) + " ms";
    return o;
}

Outcome series(const VerifyOptions& opt) {
    Outcome o;
    const Report r = series_identity_suite(opt.series);
    absorb(o, r);
    if (o.pass) o.detail = "order " + std::to_string(opt.series.order) + ", " + std::to_string(r.size()) + " identities";
    return o;
}

bool is_root_check(const CheckResult& c) { return c.name.rfind("C_n(w)/w^n integral", 0) == 0; }

Outcome values(const Report& r, std::int64_t elapsed, const VerifyOptions& opt) {
    Outcome o;
    Report rest;
    for (const auto& c : r)
        if (!is_root_check(c)) rest.push_back(c);
    absorb(o, rest);
    within(o, elapsed, values_ms, "values");
    if (o.pass) o.detail = "n <= " + std::to_string(opt.values_n) + ", " + std::to_string(rest.size()) + " checks, " + std::to_string(elapsed) + " ms";
    return o;
}

Outcome roots(const Report& r, const VerifyOptions& opt) {
    Outcome o;
    bool seen = false;
    for (const auto& c : r)
        if (is_root_check(c)) {
            seen = true;
            if (!c.pass) o.fail(format_line(c));
        }
    if (!seen) o.fail("root integrality check missing from the values suite");
    compare_table(o, 6, value_columns);
    compare_table(o, 7, value_columns);
    if (o.pass) o.detail = "d = 3, 4, 6, n <= " + std::to_string(opt.root_n) + "; tables 6-7 for n <= 18";
    return o;
}

Outcome oracles(const VerifyOptions& opt) {
    Outcome o;
    Report single, sharded;
    const auto t1 = timed_ms([&] { single = oracle_suite(opt); });
    VerifyOptions par = opt;
    par.oracle.shards = oracle_shards;
    par.oracle.parallel = true;
    const auto t8 = timed_ms([&] { sharded = oracle_suite(par); });
    absorb(o, single);
    absorb(o, sharded);
    within(o, t1, oracle_ms, "single-threaded oracles");
    within(o, t8, oracle_sharded_ms, "sharded oracles");
    if (o.pass)
        o.detail = std::to_string(single.size()) + " oracle checks, " + std::to_string(t1) + " ms single, " + std::to_string(t8) + " ms with " +
                   std::to_string(oracle_shards) + " shards";
    return o;
}

Outcome functional_equation(const VerifyOptions& opt) {
    Outcome o;
    const Report r = zeta_suite(opt);
    absorb(o, r);
    if (o.pass)
        o.detail = std::to_string(opt.zeta_samples) + " samples, n <= " + std::to_string(opt.zeta_sample_n) + "; expansion to t^" +
                   std::to_string(opt.zeta_expand_order) + " for n <= " + std::to_string(opt.zeta_expand_n);
    return o;
}

Outcome negative_control(const VerifyOptions& opt) {
    Outcome o;
    std::string summary;
    for (const auto& name : mutation_names()) {
        const Report r = run_suite("all", opt, *mutated_formulas(name));
        std::size_t fails = 0;
        for (const auto& c : r) fails += c.pass ? 0 : 1;
        if (fails == 0) o.fail("mutation " + name + " went undetected");
        summary += (summary.empty() ? "" : ", ") + name + " fails " + std::to_string(fails) + "/" + std::to_string(r.size());
    }
    if (o.pass) o.detail = summary;
    return o;
}

} // namespace

int main() {
    const VerifyOptions opt;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
    Report values_report;
    std::int64_t values_elapsed = 0;

    criteria.emplace_back("tables reproduce", [] { return tables(); });
    criteria.emplace_back("zeta displays", [] { return zeta_displays(); });
    criteria.emplace_back("triple agreement", [&] { return census(opt); });
    criteria.emplace_back("identity suite", [&] { return series(opt); });
    criteria.emplace_back("value theorems", [&] {
        values_elapsed = timed_ms([&] { values_report = values_suite(opt); });
        return values(values_report, values_elapsed, opt);
    });
    criteria.emplace_back("root-of-unity integrality", [&] { return roots(values_report, opt); });
    criteria.emplace_back("oracle equivalence", [&] { return oracles(opt); });
    criteria.emplace_back("functional equation", [&] { return functional_equation(opt); });
    criteria.emplace_back("negative control", [&] { return negative_control(opt); });

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "  " << o.detail << std::endl;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
