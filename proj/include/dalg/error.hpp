#pragma once

#include <stdexcept>
#include <string>

namespace dalg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct field_mismatch : error {
    field_mismatch() : error("operands belong to different fields") {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct dimension_mismatch : error {
    using error::error;
};

/// A bounded search (root finding, factorization, enumeration) hit its cap.
struct cap_exceeded : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

struct invalid_argument : error {
    using error::error;
};

}  // namespace dalg
