#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qinv {

/// Base class for all domain errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands belong to different rings.
struct ring_mismatch : error {
    using error::error;
};

/// Incompatible matrix shapes, ragged rows, wrong vector length.
struct dimension_error : error {
    using error::error;
};

/// The requested operation is not implemented for this ring kind.
/// Deliberate capability gaps (e.g. module membership over a local ring)
/// surface as this, never as a wrong answer.
struct capability_error : error {
    using error::error;
};

/// A parsed or constructed value does not belong to the target ring
/// (improper element of a proper rational ring, 1/2 in Z, ...).
struct value_outside_ring : error {
    using error::error;
};

/// Syntax error with a byte offset into the input text.
struct parse_error : error {
    std::size_t pos;
    parse_error(std::string msg, std::size_t at)
        : error(std::move(msg) + " at position " + std::to_string(at)), pos(at) {}
};

/// Enumeration would exceed the configured size guard.
struct enumeration_guard_error : error {
    using error::error;
};

struct invalid_argument_error : error {
    using error::error;
};

}  // namespace qinv
