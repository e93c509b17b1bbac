#pragma once

// Rendering of polynomials, tables and value columns as plain text, CSV or JSON.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "arith.hpp"
#include "census.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"

namespace hilbzeta {

using Json = nlohmann::json;

enum class OutputFormat { plain, csv, json };

inline std::optional<OutputFormat> parse_format(const std::string& s) {
    if (s == "plain") return OutputFormat::plain;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON encoding. Integers that fit in int64 are numbers, larger ones strings.

inline Json integer_to_json(const Integer& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(z));
    return Json(z.str());
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

/// {"var": "q", "offset": k, "coeffs": [c_k, c_{k+1}, ...]}
inline Json laurent_to_json(const LaurentPoly& p, const std::string& var = "q") {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
    return Json{{"var", var}, {"offset", p.is_zero() ? 0 : p.offset()}, {"coeffs", coeffs}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
    std::vector<Integer> c;
    for (const auto& x : j.at("coeffs")) c.push_back(integer_from_json(x));
    return LaurentPoly(j.at("offset").get<std::int64_t>(), std::move(c));
}

// ---------------------------------------------------------------------------
// Tables

struct TableCell {
    std::string text;
    Json value;

    static TableCell of(const Integer& z) { return {z.str(), integer_to_json(z)}; }
    static TableCell of(const LaurentPoly& p) { return {render(p), laurent_to_json(p)}; }
    static TableCell label(const std::string& s) { return {s, Json(s)}; }
};

struct Table {
    int id = 0;
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<TableCell>> rows;
};

struct Companion {
    std::string name;
    Integer value;
};

/// The polynomial of the given family with the companion values shown next to it.
struct PolyReport {
    std::string which;
    int n = 0;
    LaurentPoly poly;
    std::vector<Companion> companions;
};

inline std::vector<std::string> poly_families() { return {"A", "B", "Bcirc", "C", "P"}; }

inline PolyReport poly_report(const std::string& which, int n, const Formulas& f = standard_formulas()) {
    require(n >= 1, "n must be positive");
    const Integer one = 1, minus_one = -1;
    PolyReport r{which, n, {}, {}};
    if (which == "A") {
        r.poly = poly_A(n);
        r.companions = {{"A_n(1)", r.poly.eval(one)}, {"A_n(-1)", r.poly.eval(minus_one)}};
    } else if (which == "B") {
        r.poly = poly_B(n);
        r.companions = {{"B_n(-1)", r.poly.eval(minus_one)}};
    } else if (which == "Bcirc") {
        r.poly = poly_Bcirc(n);
        r.companions = {{"B_n^o(1)", r.poly.eval(one)}, {"B_n^o(-1)", r.poly.eval(minus_one)}};
    } else if (which == "C") {
        r.poly = poly_C(n, f);
        r.companions = {{"C_n(-1)", r.poly.eval(minus_one)}};
    } else if (which == "P") {
        r.poly = poly_P(n, f);
        r.companions = {{"P_n(1)", r.poly.eval(one)},
                        {"P_n(-1)", r.poly.eval(minus_one)},
                        {"|P_n(j)|", abs_at_root(r.poly, 3)},
                        {"|P_n(i)|", abs_at_root(r.poly, 4)},
                        {"a_{n,0}", r.poly.coeff(n - 1)}};
    } else {
        throw std::invalid_argument("unknown polynomial family: " + which + " (expected A, B, Bcirc, C or P)");
    }
    return r;
}

inline int default_table_size(int id) { return id <= 4 ? 12 : 18; }

inline Table make_table(int id, int max_n, const Formulas& f = standard_formulas()) {
    require(id >= 1 && id <= 7, "table id must be 1..7");
    require(max_n >= 1, "max_n must be positive");
    Table t;
    t.id = id;
    if (id <= 4) {
        static const char* family[] = {"C", "P", "Bcirc", "A"};
        static const char* title[] = {"The polynomials C_n(q)", "The polynomials P_n(q)", "The polynomials B_n^o(q)",
                                      "The polynomials A_n(q)"};
        static const char* head[] = {"C_n(q)", "P_n(q)", "B_n^o(q)", "A_n(q)"};
        t.title = title[id - 1];
        t.columns = {"n", head[id - 1]};
        for (int n = 1; n <= max_n; ++n) {
            const PolyReport r = poly_report(family[id - 1], n, f);
            if (n == 1)
                for (const auto& c : r.companions) t.columns.push_back(c.name);
            std::vector<TableCell> row{TableCell::of(Integer(n)), TableCell::of(r.poly)};
            for (const auto& c : r.companions) row.push_back(TableCell::of(c.value));
            t.rows.push_back(std::move(row));
        }
        return t;
    }
    t.columns = {"n"};
    for (int n = 1; n <= max_n; ++n) t.columns.push_back(std::to_string(n));
    if (id == 5) {
        t.title = "Arithmetic functions";
        const std::vector<std::pair<std::string, std::int64_t (*)(std::int64_t)>> fns = {
            {"sigma(n)", sigma}, {"sigma_0(n)", sigma0}, {"r(n)", r2}, {"r'(n)", r2_prime},
            {"r_H(n)", r_hex}, {"E_1(n;3)", excess_E1}, {"lambda(n)", lambda_mult}};
        for (const auto& [name, fn] : fns) {
            std::vector<TableCell> row{TableCell::label(name)};
            for (int n = 1; n <= max_n; ++n) row.push_back(TableCell::of(Integer(fn(n))));
            t.rows.push_back(std::move(row));
        }
    } else if (id == 6) {
        t.title = "The absolute values of a_d(n)";
        for (int d : {2, 3, 4, 6}) {
            std::vector<TableCell> row{TableCell::label("|a_" + std::to_string(d) + "(n)|")};
            for (int n = 1; n <= max_n; ++n) row.push_back(TableCell::of(Integer(abs(value_a_d(d, n, f)))));
            t.rows.push_back(std::move(row));
        }
    } else {
        t.title = "Sections of the polynomials P_n(q)";
        for (int k : {2, 3, 4, 6}) {
            std::vector<TableCell> row{TableCell::label("s_" + std::to_string(k) + "(n)")};
            for (int n = 1; n <= max_n; ++n) row.push_back(TableCell::of(section_s(k, n)));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline Json table_to_json(const Table& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(c.value);
        rows.push_back(row);
    }
    return Json{{"table", t.id}, {"title", t.title}, {"columns", t.columns}, {"rows", rows}};
}

inline std::string render_table(const Table& t, OutputFormat fmt) {
    if (fmt == OutputFormat::json) return table_to_json(t).dump(2) + "\n";
    std::string out;
    if (fmt == OutputFormat::csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + detail::csv_field(cells[i]);
            out += "\n";
        };
        line(t.columns);
        for (const auto& r : t.rows) {
            std::vector<std::string> cells;
            for (const auto& c : r) cells.push_back(c.text);
            line(cells);
        }
        return out;
    }
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].text.size());
    auto line = [&](auto get, std::size_t count) {
        std::string s;
        for (std::size_t i = 0; i < count; ++i) {
            std::string cell = get(i);
            if (i + 1 < count) cell.resize(std::max(cell.size(), width[i]), ' ');
            s += (i ? " | " : "") + cell;
        }
        out += s + "\n";
    };
    out += t.title + "\n";
    line([&](std::size_t i) { return t.columns[i]; }, t.columns.size());
    for (const auto& r : t.rows) line([&](std::size_t i) { return r[i].text; }, r.size());
    return out;
}

inline std::string render_poly_report(const PolyReport& r, OutputFormat fmt) {
    const std::string head = (r.which == "Bcirc" ? std::string("B^o") : r.which) + "_" + std::to_string(r.n);
    if (fmt == OutputFormat::json) {
        Json values = Json::object();
        for (const auto& c : r.companions) values[c.name] = integer_to_json(c.value);
        return Json{{"family", r.which}, {"n", r.n}, {"poly", laurent_to_json(r.poly)}, {"rendered", render(r.poly)}, {"values", values}}.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::string h = "family,n,poly", v = r.which + "," + std::to_string(r.n) + "," + render(r.poly);
        for (const auto& c : r.companions) {
            h += "," + detail::csv_field(c.name);
            v += "," + c.value.str();
        }
        return h + "\n" + v + "\n";
    }
    std::string out = head + "(q) = " + render(r.poly) + "\n";
    for (const auto& c : r.companions) out += c.name + " = " + c.value.str() + "\n";
    return out;
}

/// Whitespace and braces removed, "++" collapsed: the form in which rendered
/// rows are compared with typeset ones.
inline std::string normalize_cell(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\n' && c != '{' && c != '}') out += c;
    for (std::size_t p; (p = out.find("++")) != std::string::npos;) out.erase(p, 1);
    return out;
}

} // namespace hilbzeta
