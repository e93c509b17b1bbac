#pragma once

// Elements a + b*w of Z[w], w a primitive root of unity of order 3, 4 or 6.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "integer.hpp"
#include "laurent.hpp"

namespace hilbzeta {

class CyclotomicInt {
public:
    CyclotomicInt() = default;
    /// A rational integer; adopts the order of whatever it is combined with.
    CyclotomicInt(const Integer& a) : a_(a) {}  // NOLINT
    CyclotomicInt(int a) : a_(a) {}             // NOLINT
    CyclotomicInt(int order, Integer a, Integer b = 0) : d_(order), a_(std::move(a)), b_(std::move(b)) {
        check_order(order);
    }

    static CyclotomicInt omega(int order) { return CyclotomicInt(order, 0, 1); }

    /// w^k for any integer k.
    static CyclotomicInt omega_pow(int order, std::int64_t k) {
        check_order(order);
        const std::int64_t r = ((k % order) + order) % order;
        CyclotomicInt acc(order, 1, 0);
        const CyclotomicInt w = omega(order);
        for (std::int64_t i = 0; i < r; ++i) acc = acc * w;
        return acc;
    }

    int order() const { return d_; }
    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    /// w + 1/w, an integer: -1, 0, 1 for orders 3, 4, 6.
    static int trace_omega(int order) {
        switch (order) {
            case 3: return -1;
            case 4: return 0;
            case 6: return 1;
            case 0: return 0;
            default: check_order(order); return 0;
        }
    }

    bool is_rational_integer() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    CyclotomicInt conj() const {
        // conj(w) = trace - w
        return raw(d_, a_ + b_ * trace_omega(d_), -b_);
    }

    /// |z|^2 = z * conj(z), a nonnegative integer.
    Integer norm() const {
        return a_ * a_ + trace_omega(d_) * a_ * b_ + b_ * b_;
    }

    /// |z| when it is an integer.
    std::optional<Integer> abs_if_integer() const { return exact_sqrt(norm()); }

    CyclotomicInt operator-() const { return raw(d_, -a_, -b_); }

    friend CyclotomicInt operator+(const CyclotomicInt& x, const CyclotomicInt& y) {
        const int d = common(x, y);
        return raw(d, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend CyclotomicInt operator-(const CyclotomicInt& x, const CyclotomicInt& y) { return x + (-y); }
    friend CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
        const int d = common(x, y);
        // w^2 = s + t*w
        const int s = -1;
        const int t = trace_omega(d);
        const Integer bd = x.b_ * y.b_;
        return raw(d, x.a_ * y.a_ + s * bd, x.a_ * y.b_ + x.b_ * y.a_ + t * bd);
    }
    CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
    CyclotomicInt& operator-=(const CyclotomicInt& o) { return *this = *this - o; }
    CyclotomicInt& operator*=(const CyclotomicInt& o) { return *this = *this * o; }

    friend bool operator==(const CyclotomicInt& x, const CyclotomicInt& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Units of Z[w] are exactly the elements of norm 1; inverse = conj.
    bool is_unit() const { return norm() == 1; }
    CyclotomicInt unit_inverse() const {
        if (!is_unit()) throw std::domain_error("not a unit of Z[w]");
        return conj();
    }

    std::string str() const {
        const std::string w = d_ == 4 ? "i" : "w" + std::to_string(d_);
        if (b_ == 0) return a_.str();
        std::string s;
        if (a_ != 0) s = a_.str() + (b_ > 0 ? " + " : " - ");
        else if (b_ < 0) s = "-";
        const Integer mb = b_ < 0 ? Integer(-b_) : b_;
        if (mb != 1) s += mb.str() + "*";
        return s + w;
    }

private:
    static CyclotomicInt raw(int d, Integer a, Integer b) {
        CyclotomicInt z;
        z.d_ = d;
        z.a_ = std::move(a);
        z.b_ = std::move(b);
        return z;
    }
    static void check_order(int order) {
        if (order != 3 && order != 4 && order != 6)
            throw std::invalid_argument("cyclotomic order must be 3, 4 or 6");
    }
    static int common(const CyclotomicInt& x, const CyclotomicInt& y) {
        // Order 0 marks a plain integer and adapts to the other operand.
        if (x.d_ == y.d_) return x.d_;
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0) return x.d_;
        throw std::invalid_argument("mixed cyclotomic orders");
    }

    int d_ = 0;
    Integer a_ = 0;
    Integer b_ = 0;
};

/// Exact value p(w^k) in Z[w] for w of order d in {3,4,6}.
inline CyclotomicInt laurent_eval_at_root_power(const LaurentPoly& p, int d, std::int64_t k) {
    // Reduce exponents mod d, then combine the d residue classes.
    std::vector<Integer> bucket(static_cast<std::size_t>(d), 0);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t e = (p.offset() + static_cast<std::int64_t>(i)) * k;
        bucket[static_cast<std::size_t>(((e % d) + d) % d)] += c[i];
    }
    CyclotomicInt acc(d, 0, 0);
    for (int r = 0; r < d; ++r) {
        if (bucket[static_cast<std::size_t>(r)] == 0) continue;
        acc += CyclotomicInt::omega_pow(d, r) * CyclotomicInt(d, bucket[static_cast<std::size_t>(r)]);
    }
    return acc;
}

/// Exact value p(w), w primitive of order d in {3,4,6}.
inline CyclotomicInt laurent_eval_at_root(const LaurentPoly& p, int d) { return laurent_eval_at_root_power(p, d, 1); }

} // namespace hilbzeta
