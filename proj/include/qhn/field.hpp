#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhn/errors.hpp"

namespace qhn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ambient field of a matrix: the rationals (p == 0) or the prime field F_p.
/// Scalars are stored as Rational throughout; prime-field elements are integer
/// residues in [0, p).
struct Field {
    std::uint32_t p = 0;

    bool is_prime_field() const { return p != 0; }
    bool operator==(const Field&) const = default;

    /// Canonical representative: identity over Q, residue in [0, p) over F_p.
    Rational normalize(const Rational& x) const;

    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational neg(const Rational& a) const { return normalize(-a); }
    Rational inv(const Rational& a) const;

    std::string name() const;
};

Field rational_field();
Field prime_field(std::uint32_t p);

bool is_prime(std::uint64_t n);

/// Exact fraction rendering: "a" when integral, "a/b" otherwise, b > 0.
std::string to_string(const Rational& x);

/// Decimal rendering with the given number of digits, round-half-away-from-zero.
/// Exact integer arithmetic; used only for clearly-labeled approximations.
std::string to_decimal(const Rational& x, unsigned digits);

}  // namespace qhn
