#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rankcodes/gf.hpp"

namespace rankcodes {

// Whether entries live in the prime field F_q or the extension F_{q^m}.
// The embedded F_q is closed under every Field operation and its canonical
// values coincide with integers mod q, so both levels share one arithmetic
// core; the tag drives validation and serialization.
enum class FieldLevel { base, ext };

struct Matrix {
    FieldLevel level = FieldLevel::ext;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Fqm> entries;  // row-major, length rows * cols

    Matrix() = default;
    Matrix(FieldLevel level, std::size_t rows, std::size_t cols)
        : level(level), rows(rows), cols(cols), entries(rows * cols, 0) {}

    static Matrix identity(FieldLevel level, std::size_t n);

    Fqm& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    Fqm at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    std::span<Fqm> row(std::size_t r) { return {entries.data() + r * cols, cols}; }
    std::span<const Fqm> row(std::size_t r) const { return {entries.data() + r * cols, cols}; }

    bool operator==(const Matrix&) const = default;
};

// Throws field_mismatch if an entry is out of range for the matrix's level.
void validate_matrix(const Field& field, const Matrix& m);

std::size_t rank(const Field& field, Matrix m);
Matrix rref(const Field& field, Matrix m);

// Determinant by elimination with swap-sign tracking. non_square on
// rows != cols.
Fqm det(const Field& field, const Matrix& m);

// Rows form a basis of the right kernel {x : m xT = 0}; rows = nullity.
Matrix kernel(const Field& field, const Matrix& m);

Matrix mul(const Field& field, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols);

// Determinants of all k x k column selections of a k x n matrix, in
// lexicographic order of the column index sets; length C(n, k).
// rows_exceed_cols if k > n.
std::vector<Fqm> maximal_minors(const Field& field, const Matrix& m);

// The m x n matrix over F_q whose column j is expand(v[j]). The F_q-rank of
// this expansion is the rank weight of v.
Matrix expand_to_base(const Field& field, std::span<const Fqm> v);

std::size_t vector_rank(const Field& field, std::span<const Fqm> v);

// dim of the intersection of the row spaces of g1 and g2 (same ambient n):
// rows(g1) + rows(g2) - rank(vstack). rank_deficient_input unless both have
// full row rank.
std::size_t intersection_dim(const Field& field, const Matrix& g1, const Matrix& g2);

// Entrywise a |-> a^(q^s); extension level only.
Matrix frobenius_entrywise(const Field& field, const Matrix& m, unsigned s);

}  // namespace rankcodes
