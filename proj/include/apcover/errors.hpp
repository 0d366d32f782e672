#pragma once

#include <stdexcept>
#include <string>

namespace apcover {

// Raised when an input exceeds a configured enumeration or DP size limit.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the file readers on malformed input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace apcover
