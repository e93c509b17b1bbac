#pragma once

// Brute-force oracles over prime fields: coprime tuples, Groebner-cell
// enumeration through the invertibility criteria, and a census of commuting
// matrix pairs with a cyclic vector.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "census.hpp"
#include "errors.hpp"
#include "fq_poly.hpp"
#include "integer.hpp"
#include "partition.hpp"
#include "report.hpp"

namespace hilbzeta {

inline constexpr std::uint64_t default_work_limit = std::uint64_t{1} << 24;

/// HILBZETA_WORK_LIMIT if set and valid, else 2^24.
inline std::uint64_t work_limit_from_env() {
    if (const char* s = std::getenv("HILBZETA_WORK_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') return v;
    }
    return default_work_limit;
}

struct OracleConfig {
    std::uint64_t work_limit = work_limit_from_env();
    int shards = 1;
    bool parallel = false;
};

struct OracleResult {
    Integer count;
    Integer formula_value;
    bool match = false;
    std::uint64_t work = 0;
    std::int64_t elapsed_ms = 0;
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, std::uint64_t limit, const std::string& what) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / b) throw WorkBoundExceeded(what + ": work " + std::to_string(b) + "^" + std::to_string(e) + " exceeds limit " + std::to_string(limit));
        r *= b;
    }
    if (r > limit) throw WorkBoundExceeded(what + ": work exceeds limit " + std::to_string(limit));
    return r;
}

/// Splits [0, total) into contiguous shards in index order and sums fn over them.
template <typename F>
std::uint64_t sharded_sum(std::uint64_t total, const OracleConfig& cfg, F fn) {
    const std::uint64_t k = static_cast<std::uint64_t>(std::max(1, cfg.shards));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::uint64_t s = 0; s < k; ++s) ranges.emplace_back(total * s / k, total * (s + 1) / k);
    std::uint64_t sum = 0;
    if (cfg.parallel && k > 1) {
        std::vector<std::future<std::uint64_t>> parts;
        for (auto [b, e] : ranges) parts.push_back(std::async(std::launch::async, fn, b, e));
        for (auto& p : parts) sum += p.get();
    } else {
        for (auto [b, e] : ranges) sum += fn(b, e);
    }
    return sum;
}

template <typename F>
OracleResult timed(F body) {
    const auto t0 = std::chrono::steady_clock::now();
    OracleResult r = body();
    r.match = r.count == r.formula_value;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Coprime tuples

inline Integer coprime_tuple_formula(std::int64_t q, int d, int h) {
    const Integer Q = q;
    return (Q - 1) * (Q - 1) * ipow(Q, static_cast<unsigned>((h - 1) * d)) * (ipow(Q, 2u * static_cast<unsigned>(d)) - 1) / (Q * Q - 1);
}

/// Counts (P, P_1..P_h): P monic of degree d with P(0) != 0, deg P_i < d,
/// gcd(P, sum P_i Q_i) = 1.
inline OracleResult count_coprime_tuples(std::uint32_t q, int d, const std::vector<FqPoly>& Q, const OracleConfig& cfg = {}) {
    require(is_prime(q), "q must be prime");
    require(d >= 1, "d must be positive");
    require(!Q.empty(), "need at least one Q");
    FqPoly g(q);
    for (const auto& x : Q) g = gcd(g, x);
    require(g.degree() == 0, "Q_1..Q_h must be coprime");
    const int h = static_cast<int>(Q.size());
    const std::uint64_t block = detail::checked_pow(q, static_cast<std::uint64_t>(d), cfg.work_limit, "coprime tuples");
    const std::uint64_t total = detail::checked_pow(q, static_cast<std::uint64_t>((h + 1) * d), cfg.work_limit, "coprime tuples");
    return detail::timed([&] {
        const std::uint64_t count = detail::sharded_sum(total, cfg, [&](std::uint64_t b, std::uint64_t e) {
            std::uint64_t c = 0;
            for (std::uint64_t idx = b; idx < e; ++idx) {
                std::uint64_t rest = idx;
                const FqPoly P = FqPoly::monomial(q, d) + fq_poly_from_index(q, d, rest % block);
                rest /= block;
                if (P.constant_term() == 0) continue;
                FqPoly S(q);
                for (int i = 0; i < h; ++i) {
                    S += fq_poly_from_index(q, d, rest % block) * Q[static_cast<std::size_t>(i)];
                    rest /= block;
                }
                if (coprime(P, S)) ++c;
            }
            return c;
        });
        return OracleResult{Integer(count), coprime_tuple_formula(q, d, h), false, total, 0};
    });
}

// ---------------------------------------------------------------------------
// Cell matrices

/// Free entries p_{i,j} of M_lambda (1-based, i in 1..t+1, j in 1..t).
struct CellMatrixInstance {
    Partition lambda;
    std::uint32_t q = 2;
    std::vector<std::vector<FqPoly>> p;  // p[i][j], index 0 unused

    CellMatrixInstance(Partition la, std::uint32_t q_) : lambda(std::move(la)), q(q_) {
        const int t = lambda.t();
        p.assign(static_cast<std::size_t>(t) + 2, std::vector<FqPoly>(static_cast<std::size_t>(t) + 1, FqPoly(q)));
    }

    int t() const { return lambda.t(); }
    FqPoly& at(int i, int j) { return p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const FqPoly& at(int i, int j) const { return p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    /// y^{d_i} + p_i
    FqPoly diagonal(int i) const { return FqPoly::monomial(q, lambda.d(i)) + at(i, i); }

    /// Number of free scalar parameters; equals n + l.
    int parameter_count() const {
        int c = 0;
        for (int j = 1; j <= t(); ++j) c += (t() + 2 - j) * lambda.d(j);
        return c;
    }

    /// Fills the entries from a base-q index in lexicographic parameter order.
    void load(std::uint64_t index) {
        for (int j = 1; j <= t(); ++j) {
            const int dj = lambda.d(j);
            for (int i = j; i <= t() + 1; ++i) {
                if (dj == 0) {
                    at(i, j) = FqPoly(q);
                    continue;
                }
                std::vector<std::int64_t> c(static_cast<std::size_t>(dj));
                for (auto& a : c) {
                    a = static_cast<std::int64_t>(index % q);
                    index /= q;
                }
                at(i, j) = FqPoly(q, std::move(c));
            }
        }
    }

    /// Entry of M_lambda with x = 0.
    FqPoly entry_x0(int i, int j) const {
        if (i < j) return FqPoly(q);
        if (i == j) return diagonal(i);
        return at(i, j);
    }
};

/// Determinant by Laplace expansion along the first column.
inline FqPoly fq_determinant(const std::vector<std::vector<FqPoly>>& m, std::uint32_t q) {
    const std::size_t k = m.size();
    if (k == 0) return FqPoly::constant(q, 1);
    if (k == 1) return m[0][0];
    FqPoly det(q);
    for (std::size_t r = 0; r < k; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<FqPoly>> minor;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        const FqPoly term = m[r][0] * fq_determinant(minor, q);
        det = r % 2 == 0 ? det + term : det - term;
    }
    return det;
}

/// mu_i for i = 1..t (index 0 unused): determinant of rows i+1..t+1 and columns
/// i..t of M_lambda at x = 0, by the first-column recurrence with mu_{t+1} = 1.
inline std::vector<FqPoly> mu_determinants(const CellMatrixInstance& inst) {
    const int t = inst.t();
    std::vector<FqPoly> mu(static_cast<std::size_t>(t) + 2, FqPoly(inst.q));
    mu[static_cast<std::size_t>(t) + 1] = FqPoly::constant(inst.q, 1);
    for (int i = t; i >= 1; --i) {
        FqPoly acc(inst.q);
        FqPoly prod = FqPoly::constant(inst.q, 1);
        for (int j = 1; j <= t - i + 1; ++j) {
            if (j > 1) prod = -(prod * inst.diagonal(i + j - 1));
            acc += inst.at(i + j, i) * prod * mu[static_cast<std::size_t>(i + j)];
        }
        mu[static_cast<std::size_t>(i)] = acc;
    }
    mu.pop_back();
    return mu;
}

/// Same determinants from the explicit submatrices.
inline std::vector<FqPoly> mu_determinants_cofactor(const CellMatrixInstance& inst) {
    const int t = inst.t();
    std::vector<FqPoly> mu(static_cast<std::size_t>(t) + 1, FqPoly(inst.q));
    for (int i = 1; i <= t; ++i) {
        std::vector<std::vector<FqPoly>> m;
        for (int r = i + 1; r <= t + 1; ++r) {
            std::vector<FqPoly> row;
            for (int c = i; c <= t; ++c) row.push_back(inst.entry_x0(r, c));
            m.push_back(std::move(row));
        }
        mu[static_cast<std::size_t>(i)] = fq_determinant(m, inst.q);
    }
    return mu;
}

/// f_k(0, y): maximal minor of M_lambda at x = 0 with row k+1 deleted.
inline FqPoly maximal_minor_x0(const CellMatrixInstance& inst, int k) {
    const int t = inst.t();
    std::vector<std::vector<FqPoly>> m;
    for (int r = 1; r <= t + 1; ++r) {
        if (r == k + 1) continue;
        std::vector<FqPoly> row;
        for (int c = 1; c <= t; ++c) row.push_back(inst.entry_x0(r, c));
        m.push_back(std::move(row));
    }
    return fq_determinant(m, inst.q);
}

/// a_i != 0 for every i with d_i >= 1.
inline bool y_criterion(const CellMatrixInstance& inst) {
    for (int i = 1; i <= inst.t(); ++i)
        if (inst.lambda.d(i) >= 1 && inst.at(i, i).constant_term() == 0) return false;
    return true;
}

/// y^{d_i} + p_i coprime to mu_i for all i.
inline bool x_criterion(const CellMatrixInstance& inst) {
    const auto mu = mu_determinants(inst);
    for (int i = 1; i <= inst.t(); ++i)
        if (!coprime(inst.diagonal(i), mu[static_cast<std::size_t>(i)])) return false;
    return true;
}

inline OracleResult cell_enumeration_count(const Partition& la, std::uint32_t q, CellFlavor flavor,
                                           const Formulas& f = standard_formulas(), const OracleConfig& cfg = {}) {
    require(is_prime(q), "q must be prime");
    const CellMatrixInstance proto(la, q);
    ensure(proto.parameter_count() == la.n() + la.ell(), "cell dimension differs from n + l");
    const std::uint64_t total = detail::checked_pow(q, static_cast<std::uint64_t>(proto.parameter_count()), cfg.work_limit, "cell enumeration");
    LaurentPoly formula;
    switch (flavor) {
        case CellFlavor::affine: formula = cell_card_affine(la); break;
        case CellFlavor::semi_invertible: formula = cell_card_semi_invertible(la); break;
        case CellFlavor::invertible: formula = f.cell_card_invertible(la); break;
    }
    return detail::timed([&] {
        const std::uint64_t count = detail::sharded_sum(total, cfg, [&](std::uint64_t b, std::uint64_t e) {
            CellMatrixInstance inst(la, q);
            std::uint64_t c = 0;
            for (std::uint64_t idx = b; idx < e; ++idx) {
                if (flavor == CellFlavor::affine) {
                    ++c;
                    continue;
                }
                inst.load(idx);
                if (!y_criterion(inst)) continue;
                if (flavor == CellFlavor::invertible && !x_criterion(inst)) continue;
                ++c;
            }
            return c;
        });
        return OracleResult{Integer(count), formula.eval(Integer(q)), false, total, 0};
    });
}

// ---------------------------------------------------------------------------
// Commuting matrix pairs

enum class PairConstraint { none, y_invertible, xy_invertible };

inline const char* constraint_name(PairConstraint c) {
    switch (c) {
        case PairConstraint::none: return "none";
        case PairConstraint::y_invertible: return "y_invertible";
        case PairConstraint::xy_invertible: return "xy_invertible";
    }
    return "?";
}

inline std::optional<PairConstraint> parse_constraint(const std::string& s) {
    if (s == "none" || s == "affine") return PairConstraint::none;
    if (s == "y_invertible" || s == "semi_invertible") return PairConstraint::y_invertible;
    if (s == "xy_invertible" || s == "invertible") return PairConstraint::xy_invertible;
    return std::nullopt;
}

/// Square matrix over F_q, n <= 3, row-major.
struct FqMatrix {
    int n = 0;
    std::uint32_t q = 2;
    std::array<std::uint8_t, 9> a{};

    static FqMatrix from_index(int n, std::uint32_t q, std::uint64_t idx) {
        FqMatrix m{n, q, {}};
        for (int k = 0; k < n * n; ++k) {
            m.a[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(idx % q);
            idx /= q;
        }
        return m;
    }
    std::uint32_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

    friend FqMatrix operator*(const FqMatrix& x, const FqMatrix& y) {
        FqMatrix r{x.n, x.q, {}};
        for (int i = 0; i < x.n; ++i)
            for (int j = 0; j < x.n; ++j) {
                std::uint32_t s = 0;
                for (int k = 0; k < x.n; ++k) s += x(i, k) * y(k, j);
                r.a[static_cast<std::size_t>(i * x.n + j)] = static_cast<std::uint8_t>(s % x.q);
            }
        return r;
    }
    friend bool operator==(const FqMatrix& x, const FqMatrix& y) { return x.a == y.a; }

    std::uint32_t det() const {
        const std::int64_t m = q;
        std::int64_t d = 0;
        if (n == 1) d = a[0];
        if (n == 2) d = std::int64_t{a[0]} * a[3] - std::int64_t{a[1]} * a[2];
        if (n == 3)
            d = std::int64_t{a[0]} * (a[4] * a[8] - a[5] * a[7]) - std::int64_t{a[1]} * (a[3] * a[8] - a[5] * a[6]) +
                std::int64_t{a[2]} * (a[3] * a[7] - a[4] * a[6]);
        return static_cast<std::uint32_t>(((d % m) + m) % m);
    }

    std::array<std::uint32_t, 3> apply(const std::array<std::uint32_t, 3>& v) const {
        std::array<std::uint32_t, 3> r{};
        for (int i = 0; i < n; ++i) {
            std::uint32_t s = 0;
            for (int k = 0; k < n; ++k) s += (*this)(i, k) * v[static_cast<std::size_t>(k)];
            r[static_cast<std::size_t>(i)] = s % q;
        }
        return r;
    }
};

namespace detail {

using Vec3 = std::array<std::uint32_t, 3>;

/// Row-echelon basis over F_q; add() reduces and returns whether v was new.
struct Span {
    int n;
    std::uint32_t q;
    std::vector<std::pair<int, Vec3>> rows;  // (pivot, normalized row)

    bool add(Vec3 v) {
        for (const auto& [piv, r] : rows) {
            const std::uint32_t c = v[static_cast<std::size_t>(piv)];
            if (!c) continue;
            for (int k = 0; k < n; ++k)
                v[static_cast<std::size_t>(k)] = (v[static_cast<std::size_t>(k)] + (q - c) * r[static_cast<std::size_t>(k)]) % q;
        }
        int piv = 0;
        while (piv < n && v[static_cast<std::size_t>(piv)] == 0) ++piv;
        if (piv == n) return false;
        const std::uint32_t inv = FqPoly(q).inverse(v[static_cast<std::size_t>(piv)]);
        for (auto& x : v) x = x * inv % q;
        for (auto& [p2, r] : rows) {
            const std::uint32_t c = r[static_cast<std::size_t>(piv)];
            if (!c) continue;
            for (int k = 0; k < n; ++k)
                r[static_cast<std::size_t>(k)] = (r[static_cast<std::size_t>(k)] + (q - c) * v[static_cast<std::size_t>(k)]) % q;
        }
        rows.emplace_back(piv, v);
        return true;
    }
};

} // namespace detail

/// v generates F_q^n under X and Y (span closure).
inline bool is_cyclic(const FqMatrix& X, const FqMatrix& Y, const detail::Vec3& v) {
    detail::Span span{X.n, X.q, {}};
    std::vector<detail::Vec3> queue;
    if (!span.add(v)) return false;
    queue.push_back(v);
    for (std::size_t k = 0; k < queue.size() && static_cast<int>(span.rows.size()) < X.n; ++k) {
        for (const FqMatrix* M : {&X, &Y}) {
            const auto w = M->apply(queue[k]);
            if (span.add(w)) queue.push_back(w);
        }
    }
    return static_cast<int>(span.rows.size()) == X.n;
}

inline Integer gl_order(int n, std::int64_t q) {
    Integer r = 1;
    const Integer qn = ipow(Integer(q), static_cast<unsigned>(n));
    for (int i = 0; i < n; ++i) r *= qn - ipow(Integer(q), static_cast<unsigned>(i));
    return r;
}

/// Triples (X, Y, v) with XY = YX and v cyclic, divided by |GL_n(F_q)|.
/// Compared with A_n, B_n or C_n at q.
inline OracleResult matrix_pair_census(int n, std::uint32_t q, PairConstraint c, const Formulas& f = standard_formulas(), const OracleConfig& cfg = {}) {
    require(n >= 1 && n <= 3, "matrix census supports n <= 3");
    require(is_prime(q) && q < 16, "q must be a small prime");
    const std::uint64_t side = detail::checked_pow(q, static_cast<std::uint64_t>(n * n), cfg.work_limit, "matrix census");
    const std::uint64_t total = detail::checked_pow(q, static_cast<std::uint64_t>(2 * n * n), cfg.work_limit, "matrix census");
    const std::uint64_t nvec = detail::checked_pow(q, static_cast<std::uint64_t>(n), cfg.work_limit, "matrix census");
    LaurentPoly formula;
    switch (c) {
        case PairConstraint::none: formula = poly_A(n); break;
        case PairConstraint::y_invertible: formula = poly_B(n); break;
        case PairConstraint::xy_invertible: formula = poly_C(n, f); break;
    }
    return detail::timed([&] {
        const std::uint64_t triples = detail::sharded_sum(side, cfg, [&](std::uint64_t b, std::uint64_t e) {
            std::uint64_t cnt = 0;
            for (std::uint64_t xi = b; xi < e; ++xi) {
                const FqMatrix X = FqMatrix::from_index(n, q, xi);
                if (c == PairConstraint::xy_invertible && X.det() == 0) continue;
                for (std::uint64_t yi = 0; yi < side; ++yi) {
                    const FqMatrix Y = FqMatrix::from_index(n, q, yi);
                    if (c != PairConstraint::none && Y.det() == 0) continue;
                    if (!(X * Y == Y * X)) continue;
                    for (std::uint64_t vi = 1; vi < nvec; ++vi) {
                        detail::Vec3 v{};
                        std::uint64_t r = vi;
                        for (int k = 0; k < n; ++k) {
                            v[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(r % q);
                            r /= q;
                        }
                        if (is_cyclic(X, Y, v)) ++cnt;
                    }
                }
            }
            return cnt;
        });
        const Integer g = gl_order(n, q);
        ensure(Integer(triples) % g == 0, "cyclic triple count not divisible by |GL_n|");
        return OracleResult{Integer(triples) / g, formula.eval(Integer(q)), false, total, 0};
    });
}

// ---------------------------------------------------------------------------
// Suites

namespace detail {

inline std::string oracle_detail(const OracleResult& r) {
    return "count " + r.count.str() + " formula " + r.formula_value.str() + " (" + std::to_string(r.elapsed_ms) + " ms)";
}

} // namespace detail

/// Every lambda of n <= n_max, q in qs, semi-invertible and invertible flavors,
/// plus the sum over lambda against C_n(q).
inline Report cell_oracle_suite(int n_max, const std::vector<std::uint32_t>& qs, const Formulas& f = standard_formulas(), const OracleConfig& cfg = {}) {
    Report out;
    for (std::uint32_t q : qs)
        for (CellFlavor fl : {CellFlavor::semi_invertible, CellFlavor::invertible}) {
            const std::string name = std::string("cell oracle ") + flavor_name(fl) + " q=" + std::to_string(q);
            out.push_back(run_check(name, n_max, [&](auto fail) {
                for (int n = 1; n <= n_max; ++n) {
                    Integer total = 0;
                    for (const auto& la : enumerate_partitions(n)) {
                        const auto r = cell_enumeration_count(la, q, fl, f, cfg);
                        if (!r.match) return fail(n, "lambda " + la.str() + ": " + detail::oracle_detail(r));
                        total += r.count;
                    }
                    const Integer expect = (fl == CellFlavor::invertible ? poly_C(n, f) : poly_B(n)).eval(Integer(q));
                    if (total != expect) return fail(n, "sum over lambda " + total.str() + " vs " + expect.str());
                }
            }));
        }
    return out;
}

inline Report matrix_oracle_suite(const Formulas& f = standard_formulas(), const OracleConfig& cfg = {}) {
    Report out;
    const std::vector<std::pair<int, std::uint32_t>> cases = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
    for (PairConstraint c : {PairConstraint::none, PairConstraint::y_invertible, PairConstraint::xy_invertible}) {
        out.push_back(run_check(std::string("matrix census ") + constraint_name(c), 3, [&](auto fail) {
            for (auto [n, q] : cases) {
                const auto r = matrix_pair_census(n, q, c, f, cfg);
                if (!r.match) return fail(n, "q=" + std::to_string(q) + ": " + detail::oracle_detail(r));
            }
        }));
    }
    return out;
}

/// Coprime families Q used by the coprime-tuple checks.
inline std::vector<std::vector<FqPoly>> coprime_families(std::uint32_t q, int h) {
    const FqPoly one = FqPoly::constant(q, 1), y = FqPoly::monomial(q, 1);
    if (h == 1) return {{one}, {FqPoly::constant(q, q - 1)}};
    return {{y + one, one}, {y, y + one}, {y * y + one, y}, {one, FqPoly(q)}};
}

inline Report coprime_oracle_suite(const std::vector<std::uint32_t>& qs, int d_max, int h_max, const OracleConfig& cfg = {}) {
    Report out;
    for (std::uint32_t q : qs)
        out.push_back(run_check("coprime tuples q=" + std::to_string(q), d_max, [&](auto fail) {
            for (int d = 1; d <= d_max; ++d)
                for (int h = 1; h <= h_max; ++h)
                    for (const auto& Q : coprime_families(q, h)) {
                        const auto r = count_coprime_tuples(q, d, Q, cfg);
                        if (!r.match) return fail(d, "h=" + std::to_string(h) + ": " + detail::oracle_detail(r));
                    }
        }));
    return out;
}

} // namespace hilbzeta
