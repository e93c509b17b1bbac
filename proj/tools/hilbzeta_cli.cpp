// hilbzeta: polynomials, tables, zeta functions, identity suites and oracles.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilbzeta/io.hpp"
#include "hilbzeta/oracle.hpp"
#include "hilbzeta/series_identities.hpp"
#include "hilbzeta/verify.hpp"
#include "hilbzeta/zeta.hpp"

using namespace hilbzeta;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, refused = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

OutputFormat format_of(const std::string& s) {
    const auto f = parse_format(s);
    if (!f) throw UsageError("unknown format: " + s);
    return *f;
}

Formulas formulas_of(const std::string& mutate) {
    const auto f = mutated_formulas(mutate);
    if (!f) throw UsageError("unknown mutation: " + mutate);
    return *f;
}

std::vector<int> parse_parts(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto v = parse_integer(item);
        if (!v || *v < 1 || *v > 1000) throw UsageError("bad partition part: " + item);
        parts.push_back(static_cast<int>(*v));
    }
    if (parts.empty()) throw UsageError("empty partition");
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::string render_report(const Report& r, OutputFormat fmt) {
    std::string out;
    if (fmt == OutputFormat::json) {
        Json checks = Json::array();
        for (const auto& c : r) {
            Json j{{"name", c.name}, {"bound", c.bound}, {"pass", c.pass}, {"detail", c.detail}};
            j["first_mismatch"] = c.mismatch ? Json(*c.mismatch) : Json(nullptr);
            checks.push_back(j);
        }
        return Json{{"checks", checks}, {"pass", all_pass(r)}}.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        out = "status,name,bound,first_mismatch,detail\n";
        for (const auto& c : r)
            out += std::string(c.pass ? "PASS" : "FAIL") + "," + detail::csv_field(c.name) + "," + std::to_string(c.bound) + "," +
                   (c.mismatch ? std::to_string(*c.mismatch) : "") + "," + detail::csv_field(c.detail) + "\n";
        return out;
    }
    std::size_t fails = 0;
    for (const auto& c : r) {
        out += format_line(c) + "\n";
        fails += c.pass ? 0 : 1;
    }
    out += fails ? std::to_string(fails) + " of " + std::to_string(r.size()) + " checks FAILED\n"
                 : "all " + std::to_string(r.size()) + " checks passed\n";
    return out;
}

/// Named series truncated at the given order, as (index, rendered coefficient, json) rows.
Table gf_table(const std::string& name, int N) {
    Table t;
    t.title = "series " + name;
    t.columns = {"k", "coefficient"};
    auto from_l = [&](const LSeries& s) {
        for (int k = 0; k <= N; ++k) t.rows.push_back({TableCell::of(Integer(k)), TableCell::of(s[k])});
    };
    auto from_z = [&](const ZSeries& s) {
        for (int k = 0; k <= N; ++k) t.rows.push_back({TableCell::of(Integer(k)), TableCell::of(s[k])});
    };
    auto index_after = [&](std::size_t prefix) {
        const auto v = parse_integer(name.substr(prefix));
        if (!v || *v < 0 || *v > 10000) throw UsageError("bad series index in " + name);
        return static_cast<int>(*v);
    };
    if (name == "C") from_l(gf_C(N));
    else if (name == "B") from_l(gf_B(N));
    else if (name == "A") from_l(gf_A(N));
    else if (name == "P") from_l(gf_P_closed(N));
    else if (name == "phi") from_z(theta_phi(N));
    else if (name == "psi") from_z(theta_psi(N));
    else if (name.rfind("eta", 0) == 0) from_z(eta_quotient_expand(eta_for_root(index_after(3)), N));
    else if (name.rfind("a", 0) == 0) from_z(gf_a(index_after(1), N));
    else if (name.rfind("c", 0) == 0) from_z(gf_c(index_after(1), N));
    else throw UsageError("unknown series " + name + " (C, B, A, P, a<i>, c<i>, eta<d>, phi, psi)");
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting ideals of F_q[x,y] and its localizations: polynomials, tables, zeta functions, checks"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    std::uint64_t seed = VerifyOptions{}.seed;
    app.add_option("--format", format, "plain, csv or json")->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--seed", seed, "seed for randomized checks");

    std::string which;
    int n = 0;
    auto* poly = app.add_subcommand("poly", "one polynomial with its companion values");
    poly->add_option("which", which, "A, B, Bcirc, C or P")->required();
    poly->add_option("n", n, "n >= 1")->required();

    int table_id = 0, max_n = 0;
    auto* table = app.add_subcommand("table", "tables 1-4 (polynomials), 5 (arithmetic functions), 6 (|a_d(n)|), 7 (sections)");
    table->add_option("id", table_id, "1..7")->required();
    table->add_option("--max-n", max_n, "largest n (default 12 for tables 1-4, else 18)");

    std::string suite, mutate;
    bool quick = false;
    int order = 0, vn = 0, vq = 0, bound = 0;
    auto* verify = app.add_subcommand("verify", "run identity suites; exit 1 on any failure");
    verify->add_option("suite", suite, "census, series, zeta, values, oracle or all")->required();
    verify->add_flag("--quick", quick, "small bounds");
    verify->add_option("--order", order, "series order");
    verify->add_option("--max-n", bound, "bound for census and values");
    verify->add_option("--n", vn, "zeta: single n");
    verify->add_option("--q", vq, "zeta: single q");
    verify->add_option("--mutate", mutate, "inject a known bug: coeff_c_sign or cell_exponent");

    int zn = 0, zq = 0;
    std::string zt;
    bool hasse = false;
    auto* zeta = app.add_subcommand("zeta", "factored zeta function of H^n, or its value at (q, t)");
    zeta->add_option("n", zn, "n >= 1")->required();
    zeta->add_option("--q", zq, "prime power q (integer >= 2)");
    zeta->add_option("--t", zt, "rational t, e.g. 3 or 1/12");
    zeta->add_flag("--hasse-weil", hasse, "also print the Hasse-Weil product");

    int d = 0, values_max = 18;
    auto* values = app.add_subcommand("values", "a_d(n) = C_n(w)/w^n for w of order d");
    values->add_option("--d", d, "2, 3, 4 or 6")->required();
    values->add_option("--max-n", values_max, "largest n");

    int k = 0, sections_max = 18;
    auto* sections = app.add_subcommand("sections", "k-sections s_k(n) of P_n");
    sections->add_option("--k", k, "k >= 1")->required();
    sections->add_option("--max-n", sections_max, "largest n");

    std::string kind, lambda, flavor;
    int on = 0, oq = 2, od = 1, oh = 1, shards = 1;
    auto* oracle = app.add_subcommand("oracle", "brute-force count over F_q compared with the closed formula");
    oracle->set_help_flag("--help", "Print this help message and exit");
    oracle->add_option("--kind", kind, "coprime, cell or matrix")->required()->check(CLI::IsMember({"coprime", "cell", "matrix"}));
    oracle->add_option("--n", on, "n (cell, matrix)");
    oracle->add_option("--q", oq, "prime q");
    oracle->add_option("--lambda", lambda, "partition parts, e.g. 2,1,1 (cell)");
    oracle->add_option("--flavor", flavor, "affine, semi_invertible or invertible");
    oracle->add_option("--d", od, "degree d (coprime)");
    oracle->add_option("--h", oh, "number of Q_i (coprime)");
    oracle->add_option("--shards", shards, "deterministic shards run concurrently");

    std::string series;
    int gf_order = 16;
    auto* gf = app.add_subcommand("gf", "coefficients of a generating function");
    gf->add_option("series", series, "C, B, A, P, a<i>, c<i>, eta<d>, phi, psi")->required();
    gf->add_option("--order", gf_order, "truncation order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        const OutputFormat fmt = format_of(format);
        if (*poly) {
            std::cout << render_poly_report(poly_report(which, n), fmt);
        } else if (*table) {
            std::cout << render_table(make_table(table_id, max_n ? max_n : default_table_size(table_id)), fmt);
        } else if (*verify) {
            const Formulas f = formulas_of(mutate);
            VerifyOptions o = quick ? VerifyOptions::quick() : VerifyOptions{};
            o.seed = seed;
            if (order) o.series.order = order;
            if (bound) o.census_n = o.values_n = bound;
            Report r;
            if (suite == "zeta" && (vn || vq)) {
                require(vn >= 1 && vq >= 2, "verify zeta needs both --n >= 1 and --q >= 2");
                r.push_back(zeta_expand_check(vn, vq, o.zeta_expand_order, f));
                std::mt19937_64 rng(o.seed);
                std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
                for (int done = 0; done < 10;) {
                    const Rational t(num(rng), den(rng));
                    try {
                        r.push_back(functional_equation_check(vn, vq, t, f));
                        ++done;
                    } catch (const std::invalid_argument&) {
                    }
                }
            } else {
                r = run_suite(suite, o, f);
            }
            std::cout << render_report(r, fmt);
            return all_pass(r) ? ok : failed;
        } else if (*zeta) {
            const ZetaFactorization z = zeta_factorization(zn);
            if (!zt.empty() || zq) {
                const auto t = parse_rational(zt);
                if (!t || zq < 2) throw UsageError("evaluation needs --q >= 2 and --t a nonzero rational");
                const auto v = zeta_eval(z, zq, *t);
                if (!v) {
                    std::cerr << "pole: Z(t) is undefined at q = " << zq << ", t = " << to_string(*t) << "\n";
                    return usage;
                }
                if (fmt == OutputFormat::json)
                    std::cout << Json{{"n", zn}, {"q", zq}, {"t", to_string(*t)}, {"value", to_string(*v)}}.dump(2) << "\n";
                else
                    std::cout << to_string(*v) << "\n";
                return ok;
            }
            const std::string hw = render_hasse_weil(hasse_weil_factors(zn));
            if (fmt == OutputFormat::json) {
                Json ex = Json::object();
                for (auto [w, c] : z.exponents) ex[std::to_string(w)] = c;
                Json j{{"n", zn}, {"exponents", ex}, {"display", render_zeta(z)}};
                if (hasse) j["hasse_weil"] = hw;
                std::cout << j.dump(2) << "\n";
            } else if (fmt == OutputFormat::csv) {
                std::cout << "weight,exponent\n";
                for (auto [w, c] : z.exponents) std::cout << w << "," << c << "\n";
            } else {
                std::cout << "Z(t) = " << render_zeta(z) << "\n";
                if (hasse) std::cout << "zeta_H(s) = " << hw << "\n";
            }
        } else if (*values || *sections) {
            const bool is_values = values->parsed();
            const int N = is_values ? values_max : sections_max;
            require(N >= 1, "--max-n must be positive");
            Table t;
            t.title = is_values ? "a_" + std::to_string(d) + "(n)" : "s_" + std::to_string(k) + "(n)";
            t.columns = {"n", t.title};
            for (int m = 1; m <= N; ++m)
                t.rows.push_back({TableCell::of(Integer(m)), TableCell::of(is_values ? value_a_d(d, m) : section_s(k, m))});
            std::cout << render_table(t, fmt);
        } else if (*oracle) {
            OracleConfig cfg;
            cfg.shards = std::max(1, shards);
            cfg.parallel = shards > 1;
            require(oq >= 2 && oq < 1000, "--q must be a small prime");
            const auto q = static_cast<std::uint32_t>(oq);
            OracleResult res;
            if (kind == "coprime") {
                require(od >= 1 && oh >= 1 && oh <= 2, "coprime oracle needs --d >= 1 and --h in {1, 2}");
                res = count_coprime_tuples(q, od, coprime_families(q, oh).front(), cfg);
            } else if (kind == "cell") {
                const auto fl = parse_flavor(flavor.empty() ? "invertible" : flavor);
                if (!fl) throw UsageError("unknown flavor: " + flavor);
                if (!lambda.empty()) {
                    res = cell_enumeration_count(Partition::from_parts(parse_parts(lambda)), q, *fl, standard_formulas(), cfg);
                } else {
                    require(on >= 1, "cell oracle needs --lambda or --n");
                    res.match = true;
                    for (const auto& la : enumerate_partitions(on)) {
                        const auto part = cell_enumeration_count(la, q, *fl, standard_formulas(), cfg);
                        res.count += part.count;
                        res.work += part.work;
                        res.elapsed_ms += part.elapsed_ms;
                    }
                    res.formula_value = (*fl == CellFlavor::invertible ? poly_C(on) : poly_cells(on, *fl)).eval(Integer(oq));
                    res.match = res.count == res.formula_value;
                }
            } else {
                const auto c = parse_constraint(flavor.empty() ? "none" : flavor);
                if (!c) throw UsageError("unknown constraint: " + flavor);
                res = matrix_pair_census(on, q, *c, standard_formulas(), cfg);
            }
            const Json j{{"kind", kind}, {"count", integer_to_json(res.count)}, {"formula_value", integer_to_json(res.formula_value)},
                         {"match", res.match}, {"work", res.work}, {"elapsed", res.elapsed_ms}};
            if (fmt == OutputFormat::plain)
                std::cout << "count " << res.count << "  formula " << res.formula_value << "  " << (res.match ? "match" : "MISMATCH")
                          << "  (" << res.elapsed_ms << " ms)\n";
            else
                std::cout << j.dump(2) << "\n";
            return res.match ? ok : failed;
        } else if (*gf) {
            require(gf_order >= 0 && gf_order <= 2000, "--order must be in 0..2000");
            std::cout << render_table(gf_table(series, gf_order), fmt);
        }
    } catch (const WorkBoundExceeded& e) {
        std::cerr << "refused: " << e.what() << " (raise HILBZETA_WORK_LIMIT to allow)\n";
        return refused;
    } catch (const TheoremViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return failed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return ok;
}
