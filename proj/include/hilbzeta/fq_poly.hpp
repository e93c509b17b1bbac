#pragma once

// Polynomials over a prime field F_q, used by the brute-force oracles.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace hilbzeta {

class FqPoly {
public:
    FqPoly() = default;
    explicit FqPoly(std::uint32_t q) : q_(q) {}
    /// Ascending coefficients; reduced modulo q.
    FqPoly(std::uint32_t q, std::vector<std::int64_t> coeffs) : q_(q) {
        c_.reserve(coeffs.size());
        for (auto a : coeffs) c_.push_back(reduce(a));
        trim();
    }

    static FqPoly constant(std::uint32_t q, std::int64_t a) { return FqPoly(q, {a}); }
    /// y^k
    static FqPoly monomial(std::uint32_t q, int k, std::int64_t a = 1) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
        c.back() = a;
        return FqPoly(q, std::move(c));
    }

    std::uint32_t modulus() const { return q_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? 0u : c_[static_cast<std::size_t>(i)];
    }
    std::uint32_t constant_term() const { return coeff(0); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    FqPoly operator-() const {
        FqPoly r = *this;
        for (auto& a : r.c_) a = a ? q_ - a : 0;
        return r;
    }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b) {
        const std::uint32_t q = a.common_modulus(b);
        FqPoly r(q);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = static_cast<std::uint32_t>((std::uint64_t{a.coeff(static_cast<int>(i))} + b.coeff(static_cast<int>(i))) % q);
        r.trim();
        return r;
    }
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }

    friend FqPoly operator*(const FqPoly& a, const FqPoly& b) {
        const std::uint32_t q = a.common_modulus(b);
        if (a.is_zero() || b.is_zero()) return FqPoly(q);
        std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % q;
        }
        FqPoly r(q);
        r.c_.assign(acc.begin(), acc.end());
        r.trim();
        return r;
    }

    FqPoly& operator+=(const FqPoly& o) { return *this = *this + o; }
    FqPoly& operator-=(const FqPoly& o) { return *this = *this - o; }
    FqPoly& operator*=(const FqPoly& o) { return *this = *this * o; }

    friend bool operator==(const FqPoly& a, const FqPoly& b) {
        return a.c_ == b.c_ && (a.q_ == b.q_ || (a.is_zero() && b.is_zero()));
    }

    std::uint32_t inverse(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_q");
        // Fermat: a^(q-2).
        std::uint64_t result = 1, base = a, e = q_ - 2;
        while (e) {
            if (e & 1) result = result * base % q_;
            base = base * base % q_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(result);
    }

    std::pair<FqPoly, FqPoly> divmod(const FqPoly& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        const std::uint32_t q = common_modulus(b);
        FqPoly rem = *this;
        rem.q_ = q;
        FqPoly quot(q);
        if (rem.degree() < b.degree()) return {quot, rem};
        quot.c_.assign(static_cast<std::size_t>(rem.degree() - b.degree() + 1), 0);
        const std::uint64_t lead_inv = inverse(b.c_.back());
        for (int i = rem.degree(); i >= b.degree(); --i) {
            const std::uint64_t c = std::uint64_t{rem.coeff(i)} * lead_inv % q;
            if (c == 0) continue;
            const int shift = i - b.degree();
            quot.c_[static_cast<std::size_t>(shift)] = static_cast<std::uint32_t>(c);
            for (int j = 0; j <= b.degree(); ++j) {
                auto& slot = rem.c_[static_cast<std::size_t>(shift + j)];
                slot = static_cast<std::uint32_t>((slot + q - c * b.c_[static_cast<std::size_t>(j)] % q) % q);
            }
        }
        rem.trim();
        quot.trim();
        return {quot, rem};
    }

    FqPoly monic() const {
        if (is_zero()) return *this;
        const std::uint64_t inv = inverse(c_.back());
        FqPoly r = *this;
        for (auto& a : r.c_) a = static_cast<std::uint32_t>(a * inv % q_);
        return r;
    }

    std::uint32_t eval(std::uint32_t y) const {
        std::uint64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * y + *it) % q_;
        return static_cast<std::uint32_t>(acc);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const auto a = coeff(i);
            if (!a) continue;
            if (!s.empty()) s += " + ";
            if (a != 1 || i == 0) s += std::to_string(a);
            if (i >= 1) s += "y";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    std::uint32_t reduce(std::int64_t a) const {
        if (q_ == 0) throw std::invalid_argument("FqPoly modulus not set");
        const auto m = static_cast<std::int64_t>(q_);
        return static_cast<std::uint32_t>(((a % m) + m) % m);
    }
    std::uint32_t common_modulus(const FqPoly& o) const {
        if (q_ == o.q_) return q_;
        // A default-constructed zero takes the other operand's modulus.
        if (q_ == 0 && is_zero()) return o.q_;
        if (o.q_ == 0 && o.is_zero()) return q_;
        throw std::invalid_argument("mixed moduli in FqPoly arithmetic");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> c_;
};

/// Monic gcd via the Euclidean algorithm.
inline FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// gcd(a, b) == 1. gcd(0, 0) = 0 is not coprime.
inline bool coprime(const FqPoly& a, const FqPoly& b) {
    const FqPoly g = gcd(a, b);
    return g.degree() == 0;
}

/// All polynomials of degree < d over F_q, enumerated by their coefficient
/// vector read as a base-q number (index 0 is the zero polynomial).
inline FqPoly fq_poly_from_index(std::uint32_t q, int d, std::uint64_t index) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % q);
        index /= q;
    }
    return FqPoly(q, std::move(c));
}

} // namespace hilbzeta
