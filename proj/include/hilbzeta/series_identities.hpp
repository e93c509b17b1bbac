#pragma once

// Generating functions of the counting polynomials, their coefficient
// sequences, eta quotients and theta series, and the identities tying them
// together.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "census.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "report.hpp"
#include "series.hpp"

namespace hilbzeta {

using LSeries = TruncSeries<LaurentPoly>;
using ZSeries = TruncSeries<Integer>;

namespace detail {

inline LaurentPoly mono(std::int64_t e, int c = 1) { return LaurentPoly::monomial(e, c); }

inline std::string show(const Integer& z) { return z.str(); }
inline std::string show(const LaurentPoly& p) { return render(p); }

template <typename R>
void compare_coeffs(const TruncSeries<R>& got, const TruncSeries<R>& want, int from,
                    const std::function<void(std::int64_t, const std::string&)>& fail) {
    for (int n = from; n <= got.order(); ++n)
        if (!(got[n] == want[n])) {
            fail(n, "got " + show(got[n]) + ", expected " + show(want[n]));
            return;
        }
}

} // namespace detail

/// prod (1-t^i)^2 / (1 - (q+1/q) t^i + t^{2i}); [t^n] = C_n(q)/q^n.
inline LSeries gf_C(int N) {
    LSeries acc = LSeries::one(N);
    const LaurentPoly trace = detail::mono(1) + detail::mono(-1);
    for (int i = 1; i <= N; ++i) {
        const auto num = one_plus<LaurentPoly>(N, i, -1);
        LSeries den = one_plus<LaurentPoly>(N, i, -trace);
        if (2 * i <= N) den[2 * i] = LaurentPoly(1);
        acc = (acc * num * num) / den;
    }
    return acc;
}

/// prod (1-t^i)/(1-q t^i); [t^n] = (q-1) B_n°(q).
inline LSeries gf_B(int N) {
    LSeries acc = LSeries::one(N);
    for (int i = 1; i <= N; ++i)
        acc = (acc * one_plus<LaurentPoly>(N, i, -1)) / one_plus<LaurentPoly>(N, i, detail::mono(1, -1));
    return acc;
}

/// prod 1/(1 - q^{i+1} s^i); [s^n] = A_n(q).
inline LSeries gf_A(int N) {
    LSeries acc = LSeries::one(N);
    for (int i = 1; i <= N; ++i) acc = acc / one_plus<LaurentPoly>(N, i, detail::mono(i + 1, -1));
    return acc;
}

/// Left side 1 + sum_e card(C_{i^e}^{x,y}) s^e and right side
/// (1-q^i s)^2 / ((1-q^{i+1}s)(1-q^{i-1}s)).
inline std::pair<LSeries, LSeries> gf_rect_factor(int i, int N, const Formulas& f = standard_formulas()) {
    require(i >= 1, "gf_rect_factor needs i >= 1");
    LSeries lhs = LSeries::one(N);
    for (int e = 1; e <= N; ++e)
        lhs[e] = f.cell_card_invertible(Partition::from_parts(std::vector<int>(static_cast<std::size_t>(e), i)));
    const auto a = one_plus<LaurentPoly>(N, 1, detail::mono(i, -1));
    const auto rhs = (a * a) / one_plus<LaurentPoly>(N, 1, detail::mono(i + 1, -1)) /
                     one_plus<LaurentPoly>(N, 1, detail::mono(i - 1, -1));
    return {lhs, rhs};
}

/// sum_k (-1)^{k-1} t^{k(k+1)/2 + ki} / (1 - t^k); [t^n] = a_{n,i}.
inline ZSeries gf_a(int i, int N) {
    require(i >= 0, "gf_a needs i >= 0");
    ZSeries s(N);
    for (std::int64_t k = 1; k * (k + 1) / 2 + k * i <= N; ++k)
        for (std::int64_t e = k * (k + 1) / 2 + k * i; e <= N; e += k) s[static_cast<int>(e)] += neg_one_pow(k - 1);
    return s;
}

/// [t^n] = c_{n,i} for n >= 1.
inline ZSeries gf_c(int i, int N) {
    require(i >= 0, "gf_c needs i >= 0");
    ZSeries s(N);
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t lo = i == 0 ? k * (k + 1) / 2 : k * (k + 2 * i - 1) / 2;
        if (lo > N) break;
        if (i == 0) {
            s[static_cast<int>(lo)] += 2 * neg_one_pow(k);
            continue;
        }
        const std::int64_t hi = k * (k + 2 * i + 1) / 2;
        if (hi <= N) s[static_cast<int>(hi)] += neg_one_pow(k);
        s[static_cast<int>(lo)] -= neg_one_pow(k);
    }
    return s;
}

/// sum_k (-1)^{k-1} t^{k(k+1)/2} (1+t^k) / ((1-q t^k)(1-t^k/q)); [t^n] = P_n(q)/q^{n-1}.
inline LSeries gf_P_closed(int N) {
    LSeries acc(N);
    for (int k = 1; k * (k + 1) / 2 <= N; ++k) {
        const int e = k * (k + 1) / 2;
        LSeries term = LSeries::monomial(N, e, LaurentPoly(neg_one_pow(k - 1)));
        term = term * one_plus<LaurentPoly>(N, k, 1);
        term = term / one_plus<LaurentPoly>(N, k, detail::mono(1, -1)) / one_plus<LaurentPoly>(N, k, detail::mono(-1, -1));
        acc += term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Eta quotients and theta series

struct EtaQuotient {
    std::vector<std::pair<int, int>> factors;  // (m, e): eta(t^m)^e

    /// sum m e / 24, the exponent of the t-power prefactor.
    Rational prefactor() const {
        std::int64_t s = 0;
        for (auto [m, e] : factors) s += static_cast<std::int64_t>(m) * e;
        return Rational(s, 24);
    }
};

/// prod_{n>=1} (1 - t^n)
inline ZSeries euler_product(int N) {
    ZSeries acc = ZSeries::one(N);
    for (int i = 1; i <= N; ++i) acc *= one_plus<Integer>(N, i, -1);
    return acc;
}

inline ZSeries eta_quotient_expand(const EtaQuotient& q, int N) {
    const Rational pre = q.prefactor();
    if (boost::multiprecision::denominator(pre) != 1 || pre < 0)
        throw std::invalid_argument("eta quotient needs a nonnegative integral prefactor exponent");
    const auto shift = static_cast<int>(boost::multiprecision::numerator(pre));
    const ZSeries e = euler_product(N);
    ZSeries acc = ZSeries::one(N);
    for (auto [m, ex] : q.factors) {
        require(m >= 1, "eta argument multiplier must be positive");
        acc *= e.substitute_power(m).pow(ex);
    }
    return acc * ZSeries::monomial(N, shift, 1);
}

/// The eta quotient equal to 1 + sum C_n(w)/w^n t^n for w of order d.
inline EtaQuotient eta_for_root(int d) {
    switch (d) {
        case 2: return {{{1, 4}, {2, -2}}};
        case 3: return {{{1, 3}, {3, -1}}};
        case 4: return {{{1, 2}, {2, 1}, {4, -1}}};
        case 6: return {{{1, 1}, {2, 1}, {3, 1}, {6, -1}}};
        default: throw std::invalid_argument("root order must be 2, 3, 4 or 6");
    }
}

/// 1 + sum_n a_d(n) t^n, by evaluating each coefficient of gf_C at w; every
/// value is checked to be a rational integer.
inline ZSeries gf_root_of_unity_from(const LSeries& gfc, int d) {
    const int N = gfc.order();
    ZSeries out(N);
    for (int n = 0; n <= N; ++n) {
        if (d == 2) {
            out[n] = gfc[n].eval(Integer(-1));
            continue;
        }
        const CyclotomicInt z = laurent_eval_at_root(gfc[n], d);
        ensure(z.is_rational_integer(), "[t^" + std::to_string(n) + "] of gf_C at a root of order " +
                                            std::to_string(d) + " is " + z.str());
        out[n] = z.a();
    }
    return out;
}

/// Same series through the eta quotient, checked against the specialization.
inline ZSeries gf_root_of_unity(int d, int N) {
    const ZSeries s = gf_root_of_unity_from(gf_C(N), d);
    ensure(s == eta_quotient_expand(eta_for_root(d), N), "eta quotient mismatch for d = " + std::to_string(d));
    return s;
}

/// phi(t) = sum_{n in Z} t^{n^2}
inline ZSeries theta_phi(int N) {
    ZSeries s(N);
    s[0] = 1;
    for (int n = 1; n * n <= N; ++n) s[n * n] += 2;
    return s;
}

/// psi(t) = sum_{n >= 0} t^{n(n+1)/2}
inline ZSeries theta_psi(int N) {
    ZSeries s(N);
    for (int n = 0; n * (n + 1) / 2 <= N; ++n) s[n * (n + 1) / 2] += 1;
    return s;
}

/// Coefficientwise |.|
inline ZSeries abs_series(const ZSeries& s) {
    return s.map([](const Integer& x) { return x < 0 ? Integer(-x) : x; });
}

/// 1 + a_4(n) q^n against phi(-q) phi(-q^2), its absolute version against
/// phi(q) phi(q^2), |a_4(n)| = r'(n) and the sign (-1)^{floor((n+1)/2)}.
inline Report somos_identity_check(int N, const ZSeries* a4_in = nullptr) {
    const ZSeries a4 = a4_in ? *a4_in : gf_root_of_unity(4, N);
    const ZSeries phi = theta_phi(N);
    Report r;
    r.push_back(run_check("a4 series = phi(-q)phi(-q^2)", N, [&](auto fail) {
        detail::compare_coeffs(a4, phi.alternate() * phi.alternate().substitute_power(2), 0, fail);
    }));
    r.push_back(run_check("|a4| series = phi(q)phi(q^2)", N, [&](auto fail) {
        detail::compare_coeffs(abs_series(a4), phi * phi.substitute_power(2), 0, fail);
    }));
    r.push_back(run_check("|a4(n)| = r'(n)", N, [&](auto fail) {
        for (int n = 1; n <= N; ++n)
            if (abs_series(a4)[n] != r2_prime(n)) return fail(n, "");
    }));
    r.push_back(run_check("a4(n) sign rule", N, [&](auto fail) {
        for (int n = 1; n <= N; ++n)
            if (a4[n] != neg_one_pow((n + 1) / 2) * abs_series(a4)[n]) return fail(n, "");
    }));
    return r;
}

/// a_6(n) = 0 whenever n is not a sum of two squares (observed, not proved).
/// Returns the n <= N where the observation fails.
inline std::vector<int> a6_sum_of_squares_scan(const ZSeries& a6) {
    std::vector<int> bad;
    for (int n = 1; n <= a6.order(); ++n)
        if (r2(n) == 0 && a6[n] != 0) bad.push_back(n);
    return bad;
}

// ---------------------------------------------------------------------------
// Suite

struct SeriesSuiteOptions {
    int order = 32;
    int gauss_order = 100;
    int euler_order = 64;
    int theta_order = 64;
    int lambda_bound = 200;
};

inline Report series_identity_suite(const SeriesSuiteOptions& o = {}, const Formulas& f = standard_formulas()) {
    const int N = o.order;
    Report r;
    const LSeries gfc = gf_C(N);
    const LaurentPoly Q = LaurentPoly::q();

    r.push_back(run_check("gf_C coefficients = C_n/q^n", N, [&](auto fail) {
        for (int n = 1; n <= N; ++n) {
            const auto want = poly_C(n, f).shifted(-n);
            if (!(gfc[n] == want)) return fail(n, "got " + render(gfc[n]) + ", expected " + render(want));
        }
    }));
    r.push_back(run_check("gf_B coefficients = (q-1)B_n°", N, [&](auto fail) {
        const LSeries g = gf_B(N);
        for (int n = 1; n <= N; ++n)
            if (!(g[n] == (Q - LaurentPoly(1)) * poly_Bcirc(n))) return fail(n, "");
    }));
    r.push_back(run_check("gf_A coefficients = A_n", N, [&](auto fail) {
        const LSeries g = gf_A(N);
        for (int n = 1; n <= N; ++n)
            if (!(g[n] == poly_A(n))) return fail(n, "");
    }));
    r.push_back(run_check("rectangular factors", N, [&](auto fail) {
        for (int i = 1; i <= N; ++i) {
            auto [lhs, rhs] = gf_rect_factor(i, std::min(N, 12), f);
            for (int e = 0; e <= lhs.order(); ++e)
                if (!(lhs[e] == rhs[e])) return fail(i, "s^" + std::to_string(e));
        }
    }));
    r.push_back(run_check("gf_a(i) = a_{n,i}", N, [&](auto fail) {
        for (int i = 0; i <= N; ++i) {
            const ZSeries g = gf_a(i, N);
            for (int n = 1; n <= N; ++n)
                if (g[n] != coeff_a(n, i)) return fail(n, "i = " + std::to_string(i));
        }
    }));
    r.push_back(run_check("gf_c(i) = c_{n,i}", N, [&](auto fail) {
        for (int i = 0; i <= N; ++i) {
            const ZSeries g = gf_c(i, N);
            for (int n = 1; n <= N; ++n) {
                const Integer want = n >= i ? Integer(f.coeff_c(n, i)) : Integer(0);
                if (g[n] != want) return fail(n, "i = " + std::to_string(i));
            }
        }
    }));
    r.push_back(run_check("gf_P closed form = P_n/q^{n-1}", N, [&](auto fail) {
        const LSeries g = gf_P_closed(N);
        for (int n = 1; n <= N; ++n)
            if (!(g[n] == poly_P(n, f).shifted(1 - n))) return fail(n, "");
    }));
    r.push_back(run_check("Gauss identity", o.gauss_order, [&](auto fail) {
        const int M = o.gauss_order;
        ZSeries prod = ZSeries::one(M);
        for (int i = 1; i <= M; ++i) prod = prod * one_plus<Integer>(M, i, -1) / one_plus<Integer>(M, i, 1);
        ZSeries want(M);
        want[0] = 1;
        for (int k = 1; k * k <= M; ++k) want[k * k] = 2 * neg_one_pow(k);
        detail::compare_coeffs(prod, want, 0, fail);
    }));
    r.push_back(run_check("Euler identity", o.euler_order, [&](auto fail) {
        const int M = o.euler_order;
        ZSeries odd = ZSeries::one(M), distinct = ZSeries::one(M);
        for (int m = 1; 2 * m - 1 <= M; ++m) odd = odd / one_plus<Integer>(M, 2 * m - 1, -1);
        for (int i = 1; i <= M; ++i) distinct *= one_plus<Integer>(M, i, 1);
        detail::compare_coeffs(odd, distinct, 0, fail);
    }));
    for (int d : {2, 3, 4, 6}) {
        r.push_back(run_check("eta quotient d=" + std::to_string(d), N, [&](auto fail) {
            detail::compare_coeffs(gf_root_of_unity_from(gfc, d), eta_quotient_expand(eta_for_root(d), N), 0, fail);
        }));
    }
    r.push_back(run_check("d=2 series = phi(-t)^2 = 1 + sum 4 P_n(-1) (-t)^n", o.theta_order, [&](auto fail) {
        const int M = o.theta_order;
        const ZSeries gauss = theta_phi(M).alternate();
        const ZSeries sq = gauss * gauss;
        for (int n = 1; n <= M; ++n)
            if (sq[n] != 4 * neg_one_pow(n) * poly_P_from_a(n).eval(Integer(-1))) return fail(n, "");
        detail::compare_coeffs(eta_quotient_expand(eta_for_root(2), M), sq, 0, fail);
    }));
    r.push_back(run_check("phi(q^4) + 2q psi(q^8) = phi(q) and = phi(-q) with minus", o.theta_order, [&](auto fail) {
        const int M = o.theta_order;
        const ZSeries phi = theta_phi(M);
        const ZSeries tail = ZSeries::monomial(M, 1, 2) * theta_psi(M).substitute_power(8);
        detail::compare_coeffs(phi.substitute_power(4) + tail, phi, 0, fail);
        detail::compare_coeffs(phi.substitute_power(4) - tail, phi.alternate(), 0, fail);
    }));
    for (auto& c : somos_identity_check(N, nullptr)) r.push_back(c);
    r.push_back(run_check("a3(n) = -3 lambda(n) = -3(E1(n;3) - 3 E1(n/3;3))", o.lambda_bound, [&](auto fail) {
        const int M = o.lambda_bound;
        const ZSeries a3 = eta_quotient_expand(eta_for_root(3), M);
        for (int n = 1; n <= M; ++n) {
            const std::int64_t e = excess_E1(n) - 3 * (n % 3 == 0 ? excess_E1(n / 3) : 0);
            if (a3[n] != -3 * lambda_mult(n) || a3[n] != -3 * e) return fail(n, "a3 = " + a3[n].str());
            if (n <= 40 && a3[n] != value_a_d(3, n, f)) return fail(n, "cyclotomic route");
        }
    }));
    return r;
}

} // namespace hilbzeta
