#pragma once

#include <cstddef>
#include <vector>

#include "qhn/field.hpp"

namespace qhn {

/// Dense row-major matrix over a single field.
struct Matrix {
    Field field;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;  // rows * cols, row-major

    Matrix() = default;
    Matrix(Field f, std::size_t r, std::size_t c)
        : field(f), rows(r), cols(c), entries(r * c, Rational(0)) {}

    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool operator==(const Matrix&) const = default;

    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t r, std::size_t c);
};

Matrix matmul(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix basis;                 // RREF with zero rows dropped
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Unique reduced row echelon form over the matrix's field.
RrefResult rref(const Matrix& m);

/// Canonical subspace of F^n: RREF basis, pivot entries 1 with zeros above
/// and below. The zero subspace has an empty basis. Structural equality is
/// subspace equality.
struct Subspace {
    std::size_t ambient_dim = 0;
    Matrix basis;  // rows = basis vectors, cols = ambient_dim
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.rows; }
    bool operator==(const Subspace&) const = default;

    static Subspace zero(Field f, std::size_t n);
    static Subspace full(Field f, std::size_t n);
    /// Canonicalize arbitrary spanning rows.
    static Subspace span(const Matrix& rows);
};

/// Deterministic total order: (dim, pivot set lex, entries lex).
bool subspace_less(const Subspace& a, const Subspace& b);

/// Image m * u, canonicalized.
Subspace apply_map(const Matrix& m, const Subspace& u);

/// a <= b as subspaces of the same ambient space.
bool subspace_leq(const Subspace& a, const Subspace& b);

/// Membership of a single vector (length = ambient dim).
bool subspace_contains(const Subspace& s, const std::vector<Rational>& vec);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Number of subspaces of F_p^n (Galois number), via Gaussian binomials.
Int count_subspaces(std::size_t n, std::uint32_t p);

Int gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p);

/// All subspaces of F_p^n in canonical order: by dimension, then pivot set
/// (lexicographic), then free entries (lexicographic). Throws ResourceLimit
/// when the total count exceeds the guard.
std::vector<Subspace> enumerate_subspaces(std::size_t n, std::uint32_t p,
                                          std::uint64_t guard = 1000000);

}  // namespace qhn
