#pragma once

// Laurent polynomials in one variable q with exact integer coefficients.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace hilbzeta {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT: scalars embed
    LaurentPoly(const Integer& c) {                     // NOLINT
        if (c != 0) coeffs_.push_back(c);
    }
    /// Ascending coefficients starting at exponent `offset`.
    LaurentPoly(std::int64_t offset, std::vector<Integer> coeffs)
        : offset_(offset), coeffs_(std::move(coeffs)) {
        normalize();
    }
    LaurentPoly(std::int64_t offset, std::initializer_list<int> coeffs) : offset_(offset) {
        for (int c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static LaurentPoly monomial(std::int64_t exp, const Integer& c = 1) {
        return LaurentPoly(exp, std::vector<Integer>{c});
    }
    static LaurentPoly q() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t offset() const { return offset_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Lowest exponent with nonzero coefficient (valuation). Requires nonzero.
    std::int64_t low_degree() const {
        if (is_zero()) throw std::domain_error("valuation of zero polynomial");
        return offset_;
    }
    std::int64_t degree() const {
        if (is_zero()) throw std::domain_error("degree of zero polynomial");
        return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
    }

    Integer coeff(std::int64_t exp) const {
        const std::int64_t i = exp - offset_;
        if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const Integer& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bool is_polynomial() const { return is_zero() || offset_ >= 0; }

    bool is_constant() const { return is_zero() || (offset_ == 0 && coeffs_.size() == 1); }

    /// Unit iff +-q^k.
    bool is_unit() const { return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, 1); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, -1); }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return LaurentPoly(a.offset_ + b.offset_, std::move(out));
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
    }

    /// Multiply by q^k.
    LaurentPoly shifted(std::int64_t k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.offset_ += k;
        return r;
    }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// p(1/q).
    LaurentPoly reflected() const {
        if (is_zero()) return {};
        std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
        return LaurentPoly(-degree(), std::move(rev));
    }

    /// p(q^k) for k != 0.
    LaurentPoly substitute_power(std::int64_t k) const {
        if (k == 0) throw std::invalid_argument("substitute_power needs k != 0");
        std::map<std::int64_t, Integer> terms;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) terms[(offset_ + static_cast<std::int64_t>(i)) * k] += coeffs_[i];
        return from_terms(terms);
    }

    /// Keeps exponents divisible by k and divides them by k.
    LaurentPoly compress_exponents(std::int64_t k) const {
        std::map<std::int64_t, Integer> terms;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
            if (coeffs_[i] != 0 && e % k == 0) terms[e / k] += coeffs_[i];
        }
        return from_terms(terms);
    }

    static LaurentPoly from_terms(const std::map<std::int64_t, Integer>& terms) {
        if (terms.empty()) return {};
        const std::int64_t lo = terms.begin()->first;
        const std::int64_t hi = terms.rbegin()->first;
        std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
        return LaurentPoly(lo, std::move(c));
    }

    /// Exact value at an integer point; negative powers need x in {+-1}.
    Integer eval(const Integer& x) const {
        if (is_zero()) return 0;
        if (offset_ < 0 && x != 1 && x != -1)
            throw std::domain_error("Laurent evaluation with negative powers needs a unit point");
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        if (offset_ >= 0) return acc * ipow(x, static_cast<unsigned>(offset_));
        // x = +-1: x^offset = x^|offset|.
        return acc * ipow(x, static_cast<unsigned>(-offset_));
    }

    /// Exact value at a rational point (x != 0 when negative powers occur).
    Rational eval(const Rational& x) const {
        if (is_zero()) return 0;
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
        const std::int64_t k = offset_;
        if (k >= 0) return acc * ipow(x, static_cast<unsigned>(k));
        if (x == 0) throw std::domain_error("evaluation of negative power at zero");
        return acc / ipow(x, static_cast<unsigned>(-k));
    }

    /// Sum of coefficients of exponents congruent to r modulo k.
    Integer section_sum(std::int64_t k, std::int64_t r = 0) const {
        Integer s = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
            if (((e - r) % k + k) % k == 0) s += coeffs_[i];
        }
        return s;
    }

    /// Euclidean division by a polynomial with unit leading coefficient.
    /// Both operands must be genuine polynomials (offset >= 0).
    std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
        if (!is_polynomial() || !divisor.is_polynomial())
            throw std::domain_error("divmod needs polynomials");
        const Integer& lead = divisor.leading_coeff();
        if (lead != 1 && lead != -1) throw std::domain_error("divisor must have unit leading coefficient");
        // Work on dense coefficient vectors from exponent 0.
        std::vector<Integer> r = dense();
        const std::vector<Integer> dv = divisor.dense();
        const std::size_t dl = dv.size();
        if (r.size() < dl) return {LaurentPoly(), *this};
        std::vector<Integer> quot(r.size() - dl + 1);
        for (std::size_t i = r.size(); i-- >= dl;) {
            const Integer c = r[i] * lead;  // lead^{-1} == lead
            if (c == 0) continue;
            quot[i - dl + 1] = c;
            for (std::size_t j = 0; j < dl; ++j) r[i - dl + 1 + j] -= c * dv[j];
        }
        return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(r))};
    }

    /// Exact quotient; throws TheoremViolation on a nonzero remainder.
    LaurentPoly exact_div(const LaurentPoly& divisor, const char* what = "exact division") const {
        // Pull out monomial offsets so both sides become polynomials.
        if (is_zero()) return {};
        const LaurentPoly num = shifted(-offset_);
        const LaurentPoly den = divisor.shifted(-divisor.offset());
        auto [q, r] = num.divmod(den);
        ensure(r.is_zero(), std::string(what) + ": nonzero remainder");
        return q.shifted(offset_ - divisor.offset());
    }

    /// Coefficients from exponent 0 to degree (requires polynomial).
    std::vector<Integer> dense() const {
        if (is_zero()) return {};
        if (offset_ < 0) throw std::domain_error("dense() of a proper Laurent polynomial");
        std::vector<Integer> out(static_cast<std::size_t>(offset_), 0);
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return out;
    }

private:
    LaurentPoly& add_scaled(const LaurentPoly& o, int sign) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = sign > 0 ? o : -o;
            return *this;
        }
        const std::int64_t lo = std::min(offset_, o.offset_);
        const std::int64_t hi = std::max(degree(), o.degree());
        if (lo < offset_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), Integer(0));
            offset_ = lo;
        }
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
        const std::size_t base = static_cast<std::size_t>(o.offset_ - lo);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            if (sign > 0)
                coeffs_[base + i] += o.coeffs_[i];
            else
                coeffs_[base + i] -= o.coeffs_[i];
        }
        normalize();
        return *this;
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        std::size_t lead_zeros = 0;
        while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
        if (lead_zeros) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
            offset_ += static_cast<std::int64_t>(lead_zeros);
        }
        if (coeffs_.empty()) offset_ = 0;
    }

    std::int64_t offset_ = 0;
    std::vector<Integer> coeffs_;
};

/// 1 + q^2 + ... + q^{2(d-1)} = (q^{2d}-1)/(q^2-1).
inline LaurentPoly q_square_integer(int d) {
    std::vector<Integer> c(static_cast<std::size_t>(2 * d - 1), 0);
    for (int k = 0; k < d; ++k) c[static_cast<std::size_t>(2 * k)] = 1;
    return LaurentPoly(0, std::move(c));
}

/// Plain-text rendering with descending powers, e.g. "q^4 - q^3 - q + 1".
inline std::string render(const LaurentPoly& p, const std::string& var = "q") {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t idx = c.size(); idx-- > 0;) {
        const Integer& a = c[idx];
        if (a == 0) continue;
        const std::int64_t e = p.offset() + static_cast<std::int64_t>(idx);
        const bool neg = a < 0;
        const Integer mag = neg ? Integer(-a) : a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        if (e != 0) mono = (e == 1) ? var : var + "^" + std::to_string(e);
        if (e == 0)
            out += mag.str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.str() + mono;
    }
    return out;
}

} // namespace hilbzeta
