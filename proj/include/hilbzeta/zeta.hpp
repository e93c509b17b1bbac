#pragma once

// Local zeta function of H^n in factored form prod_w (1 - q^w t)^{-c_w}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "census.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "report.hpp"
#include "series.hpp"

namespace hilbzeta {

struct ZetaFactorization {
    int n = 0;
    std::map<int, int> exponents;  // weight w -> c, factor (1 - q^w t)^{-c}; zeros omitted

    friend bool operator==(const ZetaFactorization&, const ZetaFactorization&) = default;
};

inline ZetaFactorization zeta_factorization(int n, const Formulas& f = standard_formulas()) {
    require(n >= 1, "n must be positive");
    ZetaFactorization z{n, {}};
    z.exponents[n] += f.coeff_c(n, 0);
    for (int i = 1; i <= n; ++i) {
        const int c = f.coeff_c(n, i);
        z.exponents[n + i] += c;
        z.exponents[n - i] += c;
    }
    std::erase_if(z.exponents, [](const auto& kv) { return kv.second == 0; });
    return z;
}

/// True when w and 2n - w carry equal exponents.
inline bool is_symmetric(const ZetaFactorization& z) {
    for (auto [w, c] : z.exponents) {
        const auto it = z.exponents.find(2 * z.n - w);
        if (it == z.exponents.end() || it->second != c) return false;
    }
    return true;
}

namespace detail {

inline std::string zeta_factor(int w, int e, const std::string& var_t) {
    std::string s = "(1-";
    if (w == 1)
        s += "q";
    else if (w != 0)
        s += "q^" + std::to_string(w);
    s += var_t + ")";
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

} // namespace detail

/// "(1-qt)(1-q^2t)/((1-t)(1-q^3t)^2)"
inline std::string render_zeta(const ZetaFactorization& z) {
    std::string num, den;
    int den_count = 0;
    for (auto [w, c] : z.exponents) {
        if (c < 0) num += detail::zeta_factor(w, -c, "t");
        if (c > 0) {
            den += detail::zeta_factor(w, c, "t");
            ++den_count;
        }
    }
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + "/" + (den_count > 1 ? "(" + den + ")" : den);
}

/// Inverse of render_zeta; accepts the same syntax with optional spaces and braces.
inline ZetaFactorization parse_zeta_display(int n, std::string s) {
    std::erase_if(s, [](char ch) { return ch == ' ' || ch == '{' || ch == '}'; });
    ZetaFactorization z{n, {}};
    const auto slash = s.find('/');
    auto parse_side = [&](std::string part, int sign) {
        if (part.size() >= 2 && part.front() == '(' && part[1] == '(') part = part.substr(1, part.size() - 2);
        std::size_t pos = 0;
        while (pos < part.size()) {
            if (part.compare(pos, 3, "(1-") != 0) {
                if (part.substr(pos) == "1") return;
                throw std::invalid_argument("bad zeta factor near: " + part.substr(pos));
            }
            pos += 3;
            int w = 0;
            if (part[pos] == 'q') {
                ++pos;
                w = 1;
                if (part[pos] == '^') {
                    ++pos;
                    std::size_t used = 0;
                    w = std::stoi(part.substr(pos), &used);
                    pos += used;
                }
            }
            if (part.compare(pos, 2, "t)") != 0) throw std::invalid_argument("bad zeta factor");
            pos += 2;
            int e = 1;
            if (pos < part.size() && part[pos] == '^') {
                ++pos;
                std::size_t used = 0;
                e = std::stoi(part.substr(pos), &used);
                pos += used;
            }
            z.exponents[w] += sign * e;
        }
    };
    parse_side(s.substr(0, slash), -1);
    if (slash != std::string::npos) parse_side(s.substr(slash + 1), 1);
    std::erase_if(z.exponents, [](const auto& kv) { return kv.second == 0; });
    return z;
}

/// Exact Z(t) at integer q, or nothing at a pole.
inline std::optional<Rational> zeta_eval(const ZetaFactorization& z, const Integer& q, const Rational& t) {
    Rational num = 1, den = 1;
    for (auto [w, c] : z.exponents) {
        const Rational f = Rational(1) - Rational(ipow(q, static_cast<unsigned>(w))) * t;
        if (c > 0) {
            if (f == 0) return std::nullopt;
            den *= ipow(f, static_cast<unsigned>(c));
        } else {
            num *= ipow(f, static_cast<unsigned>(-c));
        }
    }
    return num / den;
}

/// Taylor coefficients of the factored form at integer q, up to t^M.
inline TruncSeries<Integer> zeta_series(const ZetaFactorization& z, const Integer& q, int M) {
    TruncSeries<Integer> acc = TruncSeries<Integer>::one(M);
    for (auto [w, c] : z.exponents) {
        const auto f = one_plus<Integer>(M, 1, -ipow(q, static_cast<unsigned>(w)));
        acc *= f.pow(-c);
    }
    return acc;
}

/// exp(sum_{m<=M} N_m t^m / m) over the rationals.
inline TruncSeries<Rational> exp_of_counts(const std::vector<Integer>& counts, int M) {
    // F = exp(G) gives k F_k = sum_{j=1}^k j G_j F_{k-j}, and j G_j = N_j.
    TruncSeries<Rational> F(M);
    F[0] = 1;
    for (int k = 1; k <= M; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += Rational(counts[static_cast<std::size_t>(j)]) * F[k - j];
        F[k] = s / k;
    }
    return F;
}

/// Expands the factored form and exp(sum C_n(q^m) t^m/m) to t^M and compares;
/// C_n comes from the cell sum, so both exponent data and cell formula are
/// exercised. Also checks t Z'/Z = sum C_n(q^m) t^m.
inline CheckResult zeta_expand_check(int n, int q, int M, const Formulas& f = standard_formulas()) {
    const std::string name = "zeta expansion n=" + std::to_string(n) + " q=" + std::to_string(q);
    return run_check(name, M, [&](auto fail) {
        require(q >= 2, "q must be at least 2");
        const ZetaFactorization z = zeta_factorization(n, f);
        const LaurentPoly c = poly_C(n, f);
        std::vector<Integer> counts(static_cast<std::size_t>(M) + 1, 0);
        for (int m = 1; m <= M; ++m) counts[static_cast<std::size_t>(m)] = c.eval(ipow(Integer(q), static_cast<unsigned>(m)));
        const auto product = zeta_series(z, q, M);
        const auto expo = exp_of_counts(counts, M);
        for (int k = 0; k <= M; ++k)
            if (Rational(product[k]) != expo[k])
                return fail(k, "product " + product[k].str() + " vs exp " + to_string(expo[k]));
        // t Z'/Z: (k Z_k) / Z as a series equals sum N_m t^m.
        TruncSeries<Integer> tdz(M);
        for (int k = 1; k <= M; ++k) tdz[k] = product[k] * k;
        const auto logd = tdz / product;
        for (int m = 1; m <= M; ++m)
            if (logd[m] != counts[static_cast<std::size_t>(m)]) return fail(m, "log derivative");
    });
}

/// Z(1/(q^{2n} t)) = Z(t), exact. Throws invalid_argument at a pole.
inline CheckResult functional_equation_check(int n, int q, const Rational& t, const Formulas& f = standard_formulas()) {
    require(q >= 2, "q must be at least 2");
    if (t == 0) throw std::invalid_argument("t must be nonzero");
    const ZetaFactorization z = zeta_factorization(n, f);
    const Rational t2 = Rational(1) / (Rational(ipow(Integer(q), static_cast<unsigned>(2 * n))) * t);
    const auto a = zeta_eval(z, q, t);
    const auto b = zeta_eval(z, q, t2);
    if (!a || !b) throw std::invalid_argument("t or 1/(q^{2n} t) is a pole");
    const std::string name = "functional equation n=" + std::to_string(n) + " q=" + std::to_string(q) + " t=" + to_string(t);
    return run_check(name, n, [&](auto fail) {
        int total = 0;
        for (auto [w, c] : z.exponents) total += c;
        if (total != 0) return fail(0, "C_n(1) != 0");
        const auto it = z.exponents.find(n);
        if (it != z.exponents.end() && it->second % 2 != 0) return fail(0, "c_{n,0} odd");
        if (*a != *b) fail(0, "Z(t) = " + to_string(*a) + " but Z(1/(q^2n t)) = " + to_string(*b));
    });
}

// Hasse-Weil zeta as prod zeta(s - s0)^e.
struct HasseWeilFactors {
    int n = 0;
    std::map<int, int> shifts;  // s0 -> e
};

inline HasseWeilFactors hasse_weil_factors(int n, const Formulas& f = standard_formulas()) {
    const auto z = zeta_factorization(n, f);
    HasseWeilFactors h{n, z.exponents};
    for (auto [s0, e] : h.shifts) {
        const auto it = h.shifts.find(2 * n - s0);
        ensure(it != h.shifts.end() && it->second == e, "Hasse-Weil shifts not symmetric about n");
    }
    return h;
}

inline std::string render_hasse_weil(const HasseWeilFactors& h) {
    auto factor = [](int s0, int e) {
        std::string s = s0 == 0 ? "zeta(s)" : "zeta(s-" + std::to_string(s0) + ")";
        if (e != 1) s += "^" + std::to_string(e);
        return s;
    };
    // Largest exponent first in the numerator.
    std::vector<std::pair<int, int>> num;
    std::string den;
    int den_count = 0;
    for (auto [s0, e] : h.shifts) {
        if (e > 0) num.emplace_back(s0, e);
        if (e < 0) {
            den += factor(s0, -e);
            ++den_count;
        }
    }
    std::stable_sort(num.begin(), num.end(), [](auto a, auto b) { return a.second > b.second; });
    std::string out;
    for (auto [s0, e] : num) out += factor(s0, e);
    if (out.empty()) out = "1";
    if (!den.empty()) out += "/" + (den_count > 1 ? "(" + den + ")" : den);
    return out;
}

} // namespace hilbzeta
