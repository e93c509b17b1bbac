#pragma once

#include <stdexcept>
#include <string>

namespace hilbzeta {

/// A proven identity failed to hold (a division left a remainder, a value
/// that must be a rational integer was not, ...). Never expected to fire.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// An enumeration would exceed the configured work bound.
class WorkBoundExceeded : public std::runtime_error {
public:
    explicit WorkBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw TheoremViolation(msg);
}

} // namespace hilbzeta
