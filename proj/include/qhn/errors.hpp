#pragma once

#include <stdexcept>
#include <string>

namespace qhn {

/// Structurally invalid input: shape mismatches, non-prime moduli, bad chains.
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed its configured ceiling.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

/// A consistency assertion failed. Either a bug or a genuine counterexample;
/// never swallowed.
struct InternalContradiction : std::runtime_error {
    explicit InternalContradiction(const std::string& msg) : std::runtime_error(msg) {}
};

/// Slope requested for the zero dimension vector.
struct UndefinedSlope : std::runtime_error {
    explicit UndefinedSlope(const std::string& msg) : std::runtime_error(msg) {}
};

/// Kempf filtration requested for a semistable representation.
struct NotUnstable : std::runtime_error {
    explicit NotUnstable(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qhn
