#pragma once

// Power series in t truncated after t^N, over an exact coefficient ring R.
//
// R must be constructible from int, support + - * and ==. Inversion of a
// constant term goes through unit_inverse(), overloaded per ring below.
// Multiplication and division skip zero coefficients, so dividing by a
// sparse factor such as 1 - a t^i + t^{2i} costs O(N) ring operations.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "integer.hpp"
#include "laurent.hpp"

namespace hilbzeta {

/// a + b e with e^2 = 0. Evaluating at q = 1 + e reads off a value and a
/// first derivative at once.
struct DualInt {
    Integer a = 0, b = 0;

    DualInt() = default;
    DualInt(int x) : a(x) {}  // NOLINT
    DualInt(Integer x, Integer y = 0) : a(std::move(x)), b(std::move(y)) {}  // NOLINT

    friend DualInt operator+(const DualInt& x, const DualInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend DualInt operator-(const DualInt& x, const DualInt& y) { return {x.a - y.a, x.b - y.b}; }
    DualInt operator-() const { return {-a, -b}; }
    friend DualInt operator*(const DualInt& x, const DualInt& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
    DualInt& operator+=(const DualInt& o) { return *this = *this + o; }
    DualInt& operator-=(const DualInt& o) { return *this = *this - o; }
    DualInt& operator*=(const DualInt& o) { return *this = *this * o; }
    friend bool operator==(const DualInt& x, const DualInt& y) { return x.a == y.a && x.b == y.b; }
};

inline std::optional<DualInt> unit_inverse(const DualInt& x) {
    if (x.a != 1 && x.a != -1) return std::nullopt;
    return DualInt(x.a, -x.b);  // (a + b e)^{-1} = a - b e when a^2 = 1
}

inline std::optional<Integer> unit_inverse(const Integer& a) {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
}
inline std::optional<Rational> unit_inverse(const Rational& a) {
    if (a == 0) return std::nullopt;
    return Rational(1) / a;
}
inline std::optional<LaurentPoly> unit_inverse(const LaurentPoly& a) {
    if (!a.is_unit()) return std::nullopt;
    return LaurentPoly::monomial(-a.offset(), a.coeffs()[0]);
}
inline std::optional<CyclotomicInt> unit_inverse(const CyclotomicInt& a) {
    if (!a.is_unit()) return std::nullopt;
    return a.unit_inverse();
}

template <typename R>
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int order) : c_(checked_size(order), R(0)) {}
    TruncSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
        c_.resize(checked_size(order), R(0));
    }

    static TruncSeries one(int order) { return monomial(order, 0, R(1)); }
    /// c * t^k (dropped if k > order).
    static TruncSeries monomial(int order, int k, const R& c) {
        TruncSeries s(order);
        if (k < 0) throw std::invalid_argument("negative exponent in power series");
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
        return s;
    }
    /// Sum of c_k t^{e_k}; repeated exponents accumulate.
    static TruncSeries from_terms(int order, const std::vector<std::pair<int, R>>& terms) {
        TruncSeries s(order);
        for (const auto& [e, c] : terms)
            if (e >= 0 && e <= order) s.c_[static_cast<std::size_t>(e)] += c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    R& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<R>& coeffs() const { return c_; }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_same(b);
        const int n = a.order();
        TruncSeries r(n);
        const auto nb = b.support();
        for (int i : a.support())
            for (int j : nb) {
                if (i + j > n) break;
                r.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            }
        return r;
    }
    friend TruncSeries operator*(const R& s, TruncSeries a) {
        for (auto& x : a.c_) x = s * x;
        return a;
    }
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    bool has_unit_constant() const { return unit_inverse(c_.front()).has_value(); }

    /// this / h, defined when h has a unit constant term.
    TruncSeries divided_by(const TruncSeries& h) const {
        check_same(h);
        const auto inv0 = unit_inverse(h.c_.front());
        if (!inv0) throw std::domain_error("power series division by a non-unit constant term");
        std::vector<int> hs;
        for (int k : h.support())
            if (k > 0) hs.push_back(k);
        TruncSeries g(order());
        for (int m = 0; m <= order(); ++m) {
            R acc = c_[static_cast<std::size_t>(m)];
            for (int k : hs) {
                if (k > m) break;
                const R& gk = g.c_[static_cast<std::size_t>(m - k)];
                if (gk == R(0)) continue;
                acc -= h.c_[static_cast<std::size_t>(k)] * gk;
            }
            g.c_[static_cast<std::size_t>(m)] = *inv0 * acc;
        }
        return g;
    }
    friend TruncSeries operator/(const TruncSeries& f, const TruncSeries& h) { return f.divided_by(h); }

    TruncSeries inverse() const { return one(order()).divided_by(*this); }

    /// Integer power; negative exponents need a unit constant term.
    TruncSeries pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        TruncSeries result = one(order()), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// f(t^k), k >= 1.
    TruncSeries substitute_power(int k) const {
        if (k < 1) throw std::invalid_argument("substitute_power needs k >= 1");
        TruncSeries r(order());
        for (int i = 0; static_cast<long long>(i) * k <= order(); ++i)
            r.c_[static_cast<std::size_t>(i * k)] = c_[static_cast<std::size_t>(i)];
        return r;
    }

    /// f(-t)
    TruncSeries alternate() const {
        TruncSeries r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    /// Coefficientwise image under a ring map.
    template <typename Fn>
    auto map(Fn&& fn) const {
        using S = decltype(fn(c_.front()));
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(fn(x));
        return TruncSeries<S>(order(), std::move(out));
    }

    TruncSeries truncated(int order) const {
        std::vector<R> c(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(c_.size()), order + 1));
        return TruncSeries(order, std::move(c));
    }

    /// Indices of nonzero coefficients, ascending.
    std::vector<int> support() const {
        std::vector<int> s;
        const R zero(0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == zero)) s.push_back(static_cast<int>(i));
        return s;
    }

private:
    static std::size_t checked_size(int order) {
        if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
        return static_cast<std::size_t>(order) + 1;
    }
    void check_same(const TruncSeries& o) const {
        if (c_.size() != o.c_.size()) throw std::invalid_argument("power series truncation orders differ");
    }

    std::vector<R> c_;
};

/// 1 + c t^k as a series of the given order.
template <typename R>
TruncSeries<R> one_plus(int order, int k, const R& c) {
    return TruncSeries<R>::one(order) + TruncSeries<R>::monomial(order, k, c);
}

/// Product of factors raised to integer exponents, truncated at order N.
template <typename R>
TruncSeries<R> series_product(const std::vector<std::pair<TruncSeries<R>, int>>& factors, int order) {
    TruncSeries<R> acc = TruncSeries<R>::one(order);
    for (const auto& [f, e] : factors) {
        const TruncSeries<R> g = f.order() == order ? f : f.truncated(order);
        if (e < 0 && !g.has_unit_constant())
            throw std::domain_error("negative exponent on a factor without unit constant term");
        for (int k = 0; k < e; ++k) acc = acc * g;
        for (int k = 0; k < -e; ++k) acc = acc / g;
    }
    return acc;
}

} // namespace hilbzeta
