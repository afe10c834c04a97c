#pragma once

#include <stdexcept>
#include <string>

namespace detrees {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad indices, unknown variable under an order, parse failures.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Operation on the zero polynomial that requires a nonzero one.
struct EmptyPolynomialError : Error {
    explicit EmptyPolynomialError(const std::string& msg) : Error(msg) {}
};

// Shape triple rejected; message names the violated constraint.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A resource guard tripped (enumeration or pair budget exceeded).
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

}  // namespace detrees
