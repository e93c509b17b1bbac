#pragma once

// Outcome of one verification check.

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hilbzeta {

struct CheckResult {
    std::string name;
    std::int64_t bound = 0;                  // order / max n checked
    bool pass = false;
    std::optional<std::int64_t> mismatch;    // first failing index
    std::string detail;
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& r) {
    for (const auto& c : r)
        if (!c.pass) return false;
    return true;
}

/// Runs body(fail) where fail(index, detail) records the first mismatch.
/// Exceptions thrown by body become a failure with their message, except a
/// work-bound refusal, which propagates.
inline CheckResult run_check(const std::string& name, std::int64_t bound,
                             const std::function<void(const std::function<void(std::int64_t, const std::string&)>&)>& body) {
    CheckResult r{name, bound, true, std::nullopt, {}};
    auto fail = [&r](std::int64_t at, const std::string& detail) {
        if (!r.pass) return;
        r.pass = false;
        r.mismatch = at;
        r.detail = detail;
    };
    try {
        body(fail);
    } catch (const WorkBoundExceeded&) {
        throw;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

/// First index where two coefficient lists differ, over [from, to].
template <typename A, typename B, typename Eq>
std::optional<std::int64_t> first_difference(const A& a, const B& b, std::int64_t from, std::int64_t to, Eq eq) {
    for (std::int64_t i = from; i <= to; ++i)
        if (!eq(a(i), b(i))) return i;
    return std::nullopt;
}

inline std::string format_line(const CheckResult& c) {
    std::string s = (c.pass ? "PASS  " : "FAIL  ") + c.name + "  [bound " + std::to_string(c.bound) + "]";
    if (c.mismatch) s += "  first mismatch at " + std::to_string(*c.mismatch);
    if (!c.detail.empty()) s += "  " + c.detail;
    return s;
}

} // namespace hilbzeta
