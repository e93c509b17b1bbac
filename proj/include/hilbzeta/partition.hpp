#pragma once

// Integer partitions together with the column profile used to parametrize
// Groebner cells: the column heights m_1 <= ... <= m_t of the Ferrers
// diagram, their increments d_i = m_i - m_{i-1}, the length l, the number v
// of nonzero increments, and the part multiplicities e_i.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbzeta {

class Partition {
public:
    /// Builds the profile from weakly decreasing positive parts.
    static Partition from_parts(std::vector<int> parts) {
        if (parts.empty()) throw std::invalid_argument("partition must have at least one part");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        return Partition(std::move(parts));
    }

    /// Builds the partition whose column increments are d_1..d_t (d_1 >= 1).
    static Partition from_increments(const std::vector<int>& d) {
        if (d.empty() || d.front() < 1) throw std::invalid_argument("d_1 must be positive");
        std::vector<int> heights;
        int h = 0;
        for (int di : d) {
            if (di < 0) throw std::invalid_argument("increments must be nonnegative");
            h += di;
            heights.push_back(h);
        }
        // Column heights read right to left; the parts are the conjugate.
        const int len = heights.back();
        std::vector<int> parts(static_cast<std::size_t>(len), 0);
        for (int col : heights)
            for (int r = 0; r < col; ++r) ++parts[static_cast<std::size_t>(r)];
        return Partition(std::move(parts));
    }

    std::span<const int> parts() const { return parts_; }
    int n() const { return n_; }
    int t() const { return static_cast<int>(m_.size()); }
    int ell() const { return static_cast<int>(parts_.size()); }
    int v() const { return v_; }

    /// m_1..m_t (1-based in the math, 0-based here).
    std::span<const int> m() const { return m_; }
    std::span<const int> d() const { return d_; }
    int m(int i) const { return m_[static_cast<std::size_t>(i - 1)]; }
    int d(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }

    /// (part size i, multiplicity e_i) for each part size present, ascending i.
    std::span<const std::pair<int, int>> multiplicities() const { return e_; }

    /// Nonzero increments, sorted ascending.
    std::vector<int> nonzero_increments_sorted() const {
        std::vector<int> out;
        for (int x : d_)
            if (x > 0) out.push_back(x);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_rectangular() const { return v_ == 1; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
        const int t = parts_.front();
        m_.assign(static_cast<std::size_t>(t), 0);
        // Conjugate parts are decreasing; m is the ascending reading.
        for (int j = 1; j <= t; ++j) {
            int height = 0;
            for (int p : parts_)
                if (p >= j) ++height;
            m_[static_cast<std::size_t>(t - j)] = height;
        }
        d_.resize(m_.size());
        int prev = 0;
        v_ = 0;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            d_[i] = m_[i] - prev;
            prev = m_[i];
            if (d_[i] > 0) ++v_;
        }
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
            if (!e_.empty() && e_.back().first == *it)
                ++e_.back().second;
            else
                e_.emplace_back(*it, 1);
        }
    }

    std::vector<int> parts_;
    int n_ = 0;
    int v_ = 0;
    std::vector<int> m_;
    std::vector<int> d_;
    std::vector<std::pair<int, int>> e_;
};

/// Calls fn(parts) for every partition of n, parts weakly decreasing, in
/// reverse lexicographic order starting from (n). The span is only valid
/// during the call.
template <typename Fn>
void for_each_partition_parts(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    a[0] = n;
    std::size_t k = 1;
    while (true) {
        fn(std::span<const int>(a.data(), k));
        // Find the rightmost part greater than 1.
        std::size_t j = k;
        int ones = 0;
        while (j > 0 && a[j - 1] == 1) {
            --j;
            ++ones;
        }
        if (j == 0) return;
        const int x = a[j - 1] - 1;
        a[j - 1] = x;
        int rest = ones + 1;
        k = j;
        while (rest > 0) {
            const int take = std::min(x, rest);
            a[k++] = take;
            rest -= take;
        }
    }
}

template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    for_each_partition_parts(n, [&](std::span<const int> parts) {
        fn(Partition::from_parts(std::vector<int>(parts.begin(), parts.end())));
    });
}

/// Every partition of n with its profile, in reverse lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](Partition p) { out.push_back(std::move(p)); });
    return out;
}

} // namespace hilbzeta
