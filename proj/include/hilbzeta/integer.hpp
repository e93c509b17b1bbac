#pragma once

// Exact integer and rational scalars shared by every module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbzeta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Decimal integer with optional sign; nullopt on anything else.
inline std::optional<Integer> parse_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return std::nullopt;
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

/// "a" or "a/b" with b != 0.
inline std::optional<Rational> parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    const auto num = parse_integer(s.substr(0, slash));
    if (!num) return std::nullopt;
    if (slash == std::string::npos) return Rational(*num);
    const auto den = parse_integer(s.substr(slash + 1));
    if (!den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
}

/// Floor square root of a nonnegative machine integer, exact for all inputs.
inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(boost::multiprecision::sqrt(Integer(n)));
    return r;
}

inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

/// Returns r with r*r == n, or nothing.
inline std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline Integer ipow(const Integer& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline Rational ipow(const Rational& base, unsigned exp) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return Rational(boost::multiprecision::pow(numerator(base), exp), boost::multiprecision::pow(denominator(base), exp));
}

/// (-1)^k
constexpr int neg_one_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// Divisors of n in increasing order (trial division).
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

} // namespace hilbzeta
