#pragma once

#include <stdexcept>
#include <string>

namespace copwidth {

// Malformed text input (graph/strategy/model/decomposition files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable cap (state count, subset count, subdivision size) was exceeded.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace copwidth
