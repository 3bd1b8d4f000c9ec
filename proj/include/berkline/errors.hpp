#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berkline {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A comparison/sign/leading-term query could not be decided at the
// precision carried by the operands. Never guessed, always raised.
struct precision_exhausted : error {
    precision_exhausted(const std::string& what = "precision exhausted")
        : error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct negative_input : error {
    negative_input(const std::string& what = "negative input") : error(what) {}
};

// The value exists in the real closure but not in this representation
// (e.g. a square root whose leading coefficient is not a rational square).
struct not_representable : error {
    using error::error;
};

struct syntax_error : error {
    std::size_t offset;
    syntax_error(const std::string& what, std::size_t at)
        : error(what + " at byte " + std::to_string(at)), offset(at) {}
};

struct ladder_exhausted : error {
    ladder_exhausted() : error("free-cut ladder exhausted before the sign stabilized") {}
};

struct infinity_has_no_diameter : error {
    infinity_has_no_diameter() : error("the point at infinity has no diameter") {}
};

struct distance_infinite : error {
    distance_infinite() : error("distance to a type-1 point is infinite") {}
};

struct out_of_range_error : error {
    using error::error;
};

struct not_positive_definite : error {
    not_positive_definite() : error("matrix is not positive definite") {}
};

struct non_unit_determinant : error {
    non_unit_determinant() : error("determinant cannot be normalized to 1") {}
};

struct invariant_violation : error {
    using error::error;
};

} // namespace berkline
