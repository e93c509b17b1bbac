#pragma once

// Arithmetic functions and special values of C_n and P_n at roots of unity.

#include <cstdint>
#include <string>
#include <vector>

#include "census.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"

namespace hilbzeta {

inline std::int64_t sigma(std::int64_t n) {
    std::int64_t s = 0;
    for (auto d : divisors(n)) s += d;
    return s;
}

inline std::int64_t sigma0(std::int64_t n) { return static_cast<std::int64_t>(divisors(n).size()); }

enum class QuadForm { sum_of_squares, x2_2y2, hexagonal };

inline const char* form_name(QuadForm f) {
    switch (f) {
        case QuadForm::sum_of_squares: return "x^2+y^2";
        case QuadForm::x2_2y2: return "x^2+2y^2";
        case QuadForm::hexagonal: return "x^2+xy+y^2";
    }
    return "?";
}

/// Number of (x, y) in Z^2 with form(x, y) = n, by bounded enumeration.
inline std::int64_t rep_count(QuadForm form, std::int64_t n) {
    require(n >= 1, "rep_count needs n >= 1");
    // x^2+xy+y^2 >= (3/4) max(x,y)^2, so |x|,|y| <= sqrt(4n/3).
    const std::int64_t bound = form == QuadForm::hexagonal ? isqrt(4 * n / 3) + 1 : isqrt(n) + 1;
    std::int64_t count = 0;
    for (std::int64_t x = -bound; x <= bound; ++x)
        for (std::int64_t y = -bound; y <= bound; ++y) {
            std::int64_t v = 0;
            switch (form) {
                case QuadForm::sum_of_squares: v = x * x + y * y; break;
                case QuadForm::x2_2y2: v = x * x + 2 * y * y; break;
                case QuadForm::hexagonal: v = x * x + x * y + y * y; break;
            }
            if (v == n) ++count;
        }
    return count;
}

inline std::int64_t r2(std::int64_t n) { return rep_count(QuadForm::sum_of_squares, n); }
inline std::int64_t r2_prime(std::int64_t n) { return rep_count(QuadForm::x2_2y2, n); }
inline std::int64_t r_hex(std::int64_t n) { return rep_count(QuadForm::hexagonal, n); }

/// E_1(n;3): divisors = 1 mod 3 minus divisors = 2 mod 3. Zero for n < 1.
inline std::int64_t excess_E1(std::int64_t n) {
    if (n < 1) return 0;
    std::int64_t e = 0;
    for (auto d : divisors(n)) {
        if (d % 3 == 1) ++e;
        if (d % 3 == 2) --e;
    }
    return e;
}

/// Multiplicative: lambda(3^e) = -2, lambda(p^e) = e+1 for p = 1 mod 6,
/// (1+(-1)^e)/2 otherwise.
inline std::int64_t lambda_mult(std::int64_t n) {
    require(n >= 1, "lambda_mult needs n >= 1");
    std::int64_t acc = 1;
    for (auto [p, e] : factorize(n)) {
        if (p == 3)
            acc *= -2;
        else if (p % 6 == 1)
            acc *= e + 1;
        else
            acc *= (e % 2 == 0) ? 1 : 0;
    }
    return acc;
}

/// p(0..N) by Euler's pentagonal recurrence.
inline std::vector<Integer> partition_numbers(int N) {
    std::vector<Integer> p(static_cast<std::size_t>(N) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Integer s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const int sign = k % 2 ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = s;
    }
    return p;
}

/// Number of partitions of 0..N into distinct odd parts (0/1 knapsack).
inline std::vector<Integer> distinct_odd_part_counts(int N) {
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    for (int part = 1; part <= N; part += 2)
        for (int n = N; n >= part; --n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - part)];
    return c;
}

/// C(w)/w^n as an integer, w primitive of order d in {2,3,4,6}.
inline Integer root_value_normalized(const LaurentPoly& c, int n, int d) {
    require(d == 2 || d == 3 || d == 4 || d == 6, "root order must be 2, 3, 4 or 6");
    if (d == 2) return c.eval(Integer(-1)) * neg_one_pow(n);
    const CyclotomicInt z = laurent_eval_at_root(c, d) * CyclotomicInt::omega_pow(d, -n);
    ensure(z.is_rational_integer(), "C_n(w)/w^n is not a rational integer for d = " + std::to_string(d) +
                                         ", n = " + std::to_string(n) + ": " + z.str());
    return z.a();
}

/// a_d(n) = C_n(w)/w^n.
inline Integer value_a_d(int d, int n, const Formulas& f = standard_formulas()) {
    require(n >= 1, "n must be positive");
    return root_value_normalized(poly_C_from_c(n, f), n, d);
}

/// |P(w)| when it is an integer, w primitive of order d in {3,4}.
inline Integer abs_at_root(const LaurentPoly& p, int d) {
    const auto a = laurent_eval_at_root(p, d).abs_if_integer();
    ensure(a.has_value(), "|P(w)| is not an integer");
    return *a;
}

/// Average of p over the k-th roots of unity, k in {1,2,3,4,6}.
inline Rational root_average(const LaurentPoly& p, int k) {
    require(k == 1 || k == 2 || k == 3 || k == 4 || k == 6, "root_average needs k in {1,2,3,4,6}");
    if (k <= 2) {
        Integer s = p.eval(Integer(1));
        if (k == 2) s += p.eval(Integer(-1));
        return Rational(s, k);
    }
    CyclotomicInt s(k, 0, 0);
    for (int j = 0; j < k; ++j) s += laurent_eval_at_root_power(p, k, j);
    ensure(s.is_rational_integer(), "root-of-unity sum is not rational");
    return Rational(s.a(), k);
}

/// s_k(n): sum of coefficients of q^{ki} in P_n. Checks the closed forms for
/// k = 1, 2, 3 and the root-of-unity average for k in {1,2,3,4,6}.
inline Integer section_s(int k, int n) {
    require(k >= 1 && n >= 1, "section_s needs k >= 1 and n >= 1");
    const LaurentPoly p = poly_P_from_a(n);
    const Integer s = p.section_sum(k);
    const std::string where = "s_" + std::to_string(k) + "(" + std::to_string(n) + ")";
    const Rational sig(sigma(n));
    if (k == 1) ensure(Rational(s) == sig, where + " != sigma(n)");
    if (k == 2) ensure(Rational(s) == (sig + Rational(r2(n), 4)) / 2, where + " closed form");
    if (k == 3) ensure(Rational(s) == (sig + Rational(r_hex(n), 3)) / 3, where + " closed form");
    if (k == 1 || k == 2 || k == 3 || k == 4 || k == 6)
        ensure(Rational(s) == root_average(p, k), where + " != root-of-unity average");
    return s;
}

} // namespace hilbzeta
