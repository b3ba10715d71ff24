#include "rankcodes/linalg.hpp"

#include <algorithm>
#include <string>

namespace rankcodes {
namespace {

// Forward elimination to row echelon form. Records pivot columns; when
// `reduce` is set, also normalizes pivots to 1 and clears above them (RREF).
// Returns the rank. `sign_flips` counts row swaps for determinant callers.
std::size_t eliminate(const Field& f, Matrix& m, bool reduce, std::vector<std::size_t>* pivot_cols,
                      std::size_t* sign_flips) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t src = pivot_row;
        while (src < m.rows && m.at(src, col) == 0) ++src;
        if (src == m.rows) continue;
        if (src != pivot_row) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(src, j), m.at(pivot_row, j));
            if (sign_flips) ++*sign_flips;
        }
        if (reduce) {
            const Fqm scale = f.inv(m.at(pivot_row, col));
            if (scale != 1) {
                for (std::size_t j = col; j < m.cols; ++j) {
                    m.at(pivot_row, j) = f.mul(scale, m.at(pivot_row, j));
                }
            }
        }
        const Fqm pivot = m.at(pivot_row, col);
        const std::size_t first = reduce ? 0 : pivot_row + 1;
        for (std::size_t r = first; r < m.rows; ++r) {
            if (r == pivot_row) continue;
            const Fqm lead = m.at(r, col);
            if (lead == 0) continue;
            const Fqm factor = reduce ? lead : f.div(lead, pivot);
            for (std::size_t j = col; j < m.cols; ++j) {
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(pivot_row, j)));
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++pivot_row;
    }
    return pivot_row;
}

void require_same_level(const Matrix& a, const Matrix& b) {
    if (a.level != b.level) fail(errc::field_mismatch, "matrices live on different field levels");
    }

}  // namespace

Matrix Matrix::identity(FieldLevel level, std::size_t n) {
    Matrix m(level, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void validate_matrix(const Field& field, const Matrix& m) {
    if (m.entries.size() != m.rows * m.cols) {
        fail(errc::dimension_mismatch, "entry count does not match rows*cols");
    }
    const Fqm limit = m.level == FieldLevel::base ? field.q() : field.size();
    for (Fqm e : m.entries) {
        if (e >= limit) {
            fail(errc::field_mismatch,
                 "entry " + std::to_string(e) + " out of range for " +
                     (m.level == FieldLevel::base ? "base" : "extension") + " level");
        }
    }
}

std::size_t rank(const Field& field, Matrix m) { return eliminate(field, m, false, nullptr, nullptr); }

Matrix rref(const Field& field, Matrix m) {
    eliminate(field, m, true, nullptr, nullptr);
    return m;
}

Fqm det(const Field& field, const Matrix& m) {
    if (m.rows != m.cols) fail(errc::non_square, "determinant of a non-square matrix");
    Matrix work = m;
    std::size_t flips = 0;
    const std::size_t r = eliminate(field, work, false, nullptr, &flips);
    if (r < m.rows) return 0;
    Fqm d = 1;
    for (std::size_t i = 0; i < m.rows; ++i) d = field.mul(d, work.at(i, i));
    return flips % 2 == 0 ? d : field.neg(d);
}

Matrix kernel(const Field& field, const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    eliminate(field, r, true, &pivots, nullptr);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0, p = 0; c < m.cols; ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
        } else {
            free_cols.push_back(c);
        }
    }
    Matrix basis(m.level, free_cols.size(), m.cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        basis.at(i, free_cols[i]) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            basis.at(i, pivots[p]) = field.neg(r.at(p, free_cols[i]));
        }
    }
    return basis;
}

Matrix mul(const Field& field, const Matrix& a, const Matrix& b) {
    require_same_level(a, b);
    if (a.cols != b.rows) fail(errc::dimension_mismatch, "inner dimensions do not match");
    Matrix out(a.level, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t t = 0; t < a.cols; ++t) {
            const Fqm aij = a.at(i, t);
            if (aij == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                out.at(i, j) = field.add(out.at(i, j), field.mul(aij, b.at(t, j)));
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.level, m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_level(a, b);
    if (a.rows != b.rows) fail(errc::dimension_mismatch, "hstack needs equal row counts");
    Matrix out(a.level, a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
        std::copy(b.row(i).begin(), b.row(i).end(), out.row(i).begin() + a.cols);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_level(a, b);
    if (a.cols != b.cols) fail(errc::dimension_mismatch, "vstack needs equal column counts");
    Matrix out(a.level, a.rows + b.rows, a.cols);
    std::copy(a.entries.begin(), a.entries.end(), out.entries.begin());
    std::copy(b.entries.begin(), b.entries.end(), out.entries.begin() + a.entries.size());
    return out;
}

Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) {
    if (row0 + rows > m.rows || col0 + cols > m.cols) {
        fail(errc::dimension_mismatch, "submatrix exceeds parent bounds");
    }
    Matrix out(m.level, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(row0 + i, col0 + j);
    }
    return out;
}

std::vector<Fqm> maximal_minors(const Field& field, const Matrix& m) {
    const std::size_t k = m.rows, n = m.cols;
    if (k > n) fail(errc::rows_exceed_cols, "maximal minors need rows <= cols");
    std::vector<Fqm> minors;
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    Matrix sq(m.level, k, k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) sq.at(i, j) = m.at(i, cols[j]);
        }
        minors.push_back(det(field, sq));
        // Next column subset in lexicographic order: bump the rightmost
        // index that still has room, then repack the tail.
        std::size_t i = k;
        while (i > 0 && cols[i - 1] + k - (i - 1) >= n) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return minors;
}

Matrix expand_to_base(const Field& field, std::span<const Fqm> v) {
    const std::size_t m = field.m(), n = v.size();
    Matrix out(FieldLevel::base, m, n);
    std::vector<Fq> digits(m);
    for (std::size_t j = 0; j < n; ++j) {
        field.expand_into(v[j], digits);
        for (std::size_t i = 0; i < m; ++i) out.at(i, j) = digits[i];
    }
    return out;
}

std::size_t vector_rank(const Field& field, std::span<const Fqm> v) {
    return rank(field, expand_to_base(field, v));
}

std::size_t intersection_dim(const Field& field, const Matrix& g1, const Matrix& g2) {
    if (g1.cols != g2.cols) fail(errc::dimension_mismatch, "ambient lengths differ");
    if (rank(field, g1) != g1.rows || rank(field, g2) != g2.rows) {
        fail(errc::rank_deficient_input, "intersection_dim expects full row rank inputs");
    }
    return g1.rows + g2.rows - rank(field, vstack(g1, g2));
}

Matrix frobenius_entrywise(const Field& field, const Matrix& m, unsigned s) {
    if (m.level != FieldLevel::ext) fail(errc::field_mismatch, "entrywise Frobenius needs extension level");
    Matrix out = m;
    for (Fqm& e : out.entries) e = field.frobenius(e, s);
    return out;
}

}  // namespace rankcodes
