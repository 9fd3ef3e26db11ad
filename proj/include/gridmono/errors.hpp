#pragma once

#include <stdexcept>
#include <string>

namespace gridmono {

// Invalid grid specification (bad dims, bad mode/dimension combination).
struct SpecError : std::invalid_argument {
    explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

// Weight vector does not match the spec (wrong length, bad arithmetic mode).
struct WeightError : std::invalid_argument {
    explicit WeightError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested (mode, dimension) combination has no supported construction
// or closed form.
struct UnsupportedError : std::invalid_argument {
    explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation exceeded a hard resource cap (e.g. configuration enumeration).
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant violated; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gridmono
