#pragma once

#include <stdexcept>
#include <string>

namespace hypat {

// Bad input text (files, CLI scalar literals). CLI maps this to exit 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable resource guard tripped (term counts, subset caps, game depth).
// CLI maps this to exit 3.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A condition that is mathematically guaranteed failed to hold; always a bug.
// CLI maps this to exit 70.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// For invariants backed by a proof, not by the caller's good behavior.
inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace hypat
