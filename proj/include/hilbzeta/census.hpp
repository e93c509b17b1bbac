#pragma once

// Cell cardinalities and the ideal-counting polynomials A_n, B_n, B_n°, C_n,
// P_n, together with the closed-form coefficients c_{n,i} and a_{n,i}.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "partition.hpp"

namespace hilbzeta {

enum class CellFlavor { affine, semi_invertible, invertible };

inline const char* flavor_name(CellFlavor f) {
    switch (f) {
        case CellFlavor::affine: return "affine";
        case CellFlavor::semi_invertible: return "semi_invertible";
        case CellFlavor::invertible: return "invertible";
    }
    return "?";
}

inline std::optional<CellFlavor> parse_flavor(const std::string& s) {
    if (s == "affine") return CellFlavor::affine;
    if (s == "semi_invertible" || s == "semi-invertible") return CellFlavor::semi_invertible;
    if (s == "invertible") return CellFlavor::invertible;
    return std::nullopt;
}

inline LaurentPoly q_minus_one() { return LaurentPoly(0, {-1, 1}); }

/// q^{n+l}
inline LaurentPoly cell_card_affine(const Partition& la) {
    return LaurentPoly::monomial(la.n() + la.ell());
}

/// (q-1)^v q^{n+l-v}
inline LaurentPoly cell_card_semi_invertible(const Partition& la) {
    return q_minus_one().pow(static_cast<unsigned>(la.v())).shifted(la.n() + la.ell() - la.v());
}

/// (q-1)^{2v} q^{n-l} prod_{d_i >= 1} (q^{2d_i}-1)/(q^2-1)
inline LaurentPoly cell_card_invertible(const Partition& la) {
    const LaurentPoly q2m1(0, {-1, 0, 1});
    LaurentPoly prod(1);
    for (int di : la.d()) {
        if (di == 0) continue;
        const LaurentPoly num = LaurentPoly::monomial(2 * di) - LaurentPoly(1);
        prod = prod * num.exact_div(q2m1, "cell_card_invertible");
    }
    return q_minus_one().pow(static_cast<unsigned>(2 * la.v())).shifted(la.n() - la.ell()) * prod;
}

inline LaurentPoly cell_card(const Partition& la, CellFlavor f) {
    switch (f) {
        case CellFlavor::affine: return cell_card_affine(la);
        case CellFlavor::semi_invertible: return cell_card_semi_invertible(la);
        case CellFlavor::invertible: return cell_card_invertible(la);
    }
    return {};
}

/// P_lambda = card(C_lambda^{x,y}) / (q-1)^2
inline LaurentPoly poly_P_lambda(const Partition& la) {
    return cell_card_invertible(la).exact_div(q_minus_one().pow(2), "P_lambda");
}

// ---------------------------------------------------------------------------
// Closed-form coefficients

/// k >= 1 with n = k(k+2i+1)/2, i.e. n = (i+1) + ... + (i+k).
inline std::optional<std::int64_t> is_trapezoidal(std::int64_t n, std::int64_t i) {
    require(n >= 1 && i >= 0, "is_trapezoidal needs n >= 1 and i >= 0");
    const std::int64_t b = 2 * i + 1;
    const std::int64_t disc = 8 * n + b * b;
    const std::int64_t delta = isqrt(disc);
    if (delta * delta != disc || delta <= b || (delta - b) % 2 != 0) return std::nullopt;
    return (delta - b) / 2;
}

inline int coeff_c(std::int64_t n, std::int64_t i) {
    require(n >= 1, "coeff_c needs n >= 1");
    require(i >= 0 && i <= n, "coeff_c needs 0 <= i <= n");
    if (i == 0) {
        const auto k = is_trapezoidal(n, 0);
        return k ? 2 * static_cast<int>(neg_one_pow(*k)) : 0;
    }
    if (const auto k = is_trapezoidal(n, i)) return static_cast<int>(neg_one_pow(*k));
    if (const auto k = is_trapezoidal(n, i - 1)) return static_cast<int>(neg_one_pow(*k - 1));
    return 0;
}

/// Number of divisors d of n with (i + sqrt(2n+i^2))/2 < d <= i + sqrt(2n+i^2).
inline std::int64_t coeff_a(std::int64_t n, std::int64_t i) {
    require(n >= 1 && i >= 0, "coeff_a needs n >= 1 and i >= 0");
    if (i >= n) return 0;
    std::int64_t count = 0;
    for (std::int64_t d : divisors(n)) {
        const bool above = 2 * d - i > 0 && 2 * d * (d - i) > n;
        const bool below = d <= i || d * (d - 2 * i) <= 2 * n;
        if (above && below) ++count;
    }
    return count;
}

// The two formulas a mutation harness may swap out. Everything downstream
// that depends on them takes a Formulas by reference.
struct Formulas {
    std::function<int(std::int64_t, std::int64_t)> coeff_c;
    std::function<LaurentPoly(const Partition&)> cell_card_invertible;
};

inline const Formulas& standard_formulas() {
    static const Formulas f{
        [](std::int64_t n, std::int64_t i) { return hilbzeta::coeff_c(n, i); },
        [](const Partition& la) { return hilbzeta::cell_card_invertible(la); },
    };
    return f;
}

/// C_n(q) = c_{n,0} q^n + sum_i c_{n,i} (q^{n+i} + q^{n-i})
inline LaurentPoly poly_C_from_c(int n, const Formulas& f = standard_formulas()) {
    require(n >= 1, "n must be positive");
    std::map<std::int64_t, Integer> terms;
    terms[n] += f.coeff_c(n, 0);
    for (int i = 1; i <= n; ++i) {
        const int c = f.coeff_c(n, i);
        if (!c) continue;
        terms[n + i] += c;
        terms[n - i] += c;
    }
    return LaurentPoly::from_terms(terms);
}

/// P_n(q) = q^{n-1} (a_{n,0} + sum_i a_{n,i} (q^i + q^{-i}))
inline LaurentPoly poly_P_from_a(int n) {
    require(n >= 1, "n must be positive");
    std::map<std::int64_t, Integer> terms;
    terms[n - 1] += coeff_a(n, 0);
    for (int i = 1; i < n; ++i) {
        const auto a = coeff_a(n, i);
        if (!a) continue;
        terms[n - 1 + i] += a;
        terms[n - 1 - i] += a;
    }
    return LaurentPoly::from_terms(terms);
}

/// P_n(q^2) as a signed sum of even-exponent runs over factorizations
/// 2n = km with k < m of opposite parity, then compressed back to P_n(q).
inline LaurentPoly poly_P_even_form(int n) {
    require(n >= 1, "n must be positive");
    std::map<std::int64_t, Integer> terms;
    for (std::int64_t k : divisors(2 * static_cast<std::int64_t>(n))) {
        const std::int64_t m = 2 * n / k;
        if (k >= m || (k + m) % 2 == 0) continue;
        const Integer sign = neg_one_pow(k - 1);
        for (std::int64_t e = 2 * n - 1 + k - m; e <= 2 * n - 3 + m - k; e += 2) terms[e] += sign;
    }
    const LaurentPoly even = LaurentPoly::from_terms(terms);
    return even.compress_exponents(2);
}

// ---------------------------------------------------------------------------
// Sums over partitions
//
// Every cell cardinality depends on lambda only through (l, multiset of
// nonzero d_i), and the nonzero d_i are the part multiplicities. Partitions
// are grouped by that key and each class is evaluated once.

struct PartitionClass {
    Partition representative;
    Integer count;
};

inline std::vector<PartitionClass> partition_classes(int n) {
    require(n >= 1, "n must be positive");
    std::map<std::vector<int>, std::pair<std::vector<int>, Integer>> classes;
    std::vector<int> key;
    for_each_partition_parts(n, [&](std::span<const int> parts) {
        key.clear();
        key.push_back(static_cast<int>(parts.size()));
        std::size_t j = 0;
        while (j < parts.size()) {
            std::size_t k = j;
            while (k < parts.size() && parts[k] == parts[j]) ++k;
            key.push_back(static_cast<int>(k - j));
            j = k;
        }
        std::sort(key.begin() + 1, key.end());
        auto it = classes.find(key);
        if (it == classes.end())
            classes.emplace(key, std::make_pair(std::vector<int>(parts.begin(), parts.end()), Integer(1)));
        else
            ++it->second.second;
    });
    std::vector<PartitionClass> out;
    out.reserve(classes.size());
    for (auto& [k, v] : classes) out.push_back({Partition::from_parts(std::move(v.first)), std::move(v.second)});
    return out;
}

template <typename Fn>
LaurentPoly sum_over_partitions(int n, Fn&& cell) {
    LaurentPoly acc;
    for (const auto& c : partition_classes(n)) acc = acc + LaurentPoly(c.count) * cell(c.representative);
    return acc;
}

inline LaurentPoly poly_A(int n) { return sum_over_partitions(n, cell_card_affine); }

inline LaurentPoly poly_B(int n) { return sum_over_partitions(n, cell_card_semi_invertible); }

/// sum (q-1)^{v-1} q^{l-v}; B_n = (q-1) q^n B_n°.
inline LaurentPoly poly_Bcirc(int n) {
    return sum_over_partitions(n, [](const Partition& la) {
        return q_minus_one().pow(static_cast<unsigned>(la.v() - 1)).shifted(la.ell() - la.v());
    });
}

inline LaurentPoly poly_C(int n, const Formulas& f = standard_formulas()) {
    return sum_over_partitions(n, f.cell_card_invertible);
}

inline LaurentPoly poly_P(int n, const Formulas& f = standard_formulas()) {
    return poly_C(n, f).exact_div(q_minus_one().pow(2), "P_n = C_n/(q-1)^2");
}

/// Sum over partitions of any flavor.
inline LaurentPoly poly_cells(int n, CellFlavor flavor) {
    return sum_over_partitions(n, [flavor](const Partition& la) { return cell_card(la, flavor); });
}

// ---------------------------------------------------------------------------
// Valuation word of B_n°

struct ValuationWord {
    std::string word;         // v_1 .. v_N
    std::string conjectured;  // prefix of 0 prod_k 0 1^{2k} 0 2^k
    bool agrees = false;
    std::size_t first_difference = 0;  // 1-based; 0 when equal
};

inline std::string conjectured_valuation_word(std::size_t length) {
    std::string w = "0";
    for (std::size_t k = 1; w.size() < length; ++k) {
        w += '0';
        w.append(2 * k, '1');
        w += '0';
        w.append(k, '2');
    }
    w.resize(length);
    return w;
}

/// From a list of B_1°, ..., B_N°.
inline ValuationWord valuation_word_from(const std::vector<LaurentPoly>& bcirc) {
    ValuationWord out;
    for (const auto& b : bcirc) {
        const auto v = b.low_degree();
        ensure(v >= 0 && v <= 9, "valuation of B_n° out of digit range");
        out.word += static_cast<char>('0' + v);
    }
    out.conjectured = conjectured_valuation_word(out.word.size());
    out.agrees = out.word == out.conjectured;
    for (std::size_t i = 0; i < out.word.size(); ++i)
        if (out.word[i] != out.conjectured[i]) {
            out.first_difference = i + 1;
            break;
        }
    return out;
}

inline ValuationWord valuation_word(int N) {
    require(N >= 1, "N must be positive");
    std::vector<LaurentPoly> b;
    for (int n = 1; n <= N; ++n) b.push_back(poly_Bcirc(n));
    return valuation_word_from(b);
}

} // namespace hilbzeta
