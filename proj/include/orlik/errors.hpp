#pragma once

#include <stdexcept>
#include <string>

namespace orlik {

// Invalid input from the caller (bad arguments, malformed data). CLI exit 1.
struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but exceeds a configured size/effort cap. CLI exit 1.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed: two routes to the same value disagree, or a
// certified object fails its own verification. Never caused by user input
// alone; indicates a bug or a violated theorem. CLI exit 2.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace orlik
