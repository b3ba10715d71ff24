#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "rankcodes/linalg.hpp"
#include "rankcodes/rng.hpp"
#include "test_helpers.hpp"

using namespace rankcodes;
using namespace rankcodes::testing;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::bad_input;
}

bool is_zero(const Matrix& m) {
    for (Fqm e : m.entries)
        if (e != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rank and determinant basics") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    const Matrix id = Matrix::identity(FieldLevel::ext, 3);
    CHECK(rank(*f, id) == 3);
    CHECK(det(*f, id) == 1);
    CHECK(rank(*f, Matrix(FieldLevel::ext, 2, 5)) == 0);

    const Matrix singular = ext_matrix({{1, 2}, {2, 1}});  // row2 = 2*row1, since 2*2 = 1 in F_3
    CHECK(rank(*f, singular) == 1);
    CHECK(det(*f, singular) == 0);
    CHECK(det(*f, ext_matrix({{1, 0}, {0, 1}})) == 1);
    CHECK(det(*f, ext_matrix({{1, 1}, {1, 1}})) == 0);
    CHECK(code_of([&] { det(*f, Matrix(FieldLevel::ext, 2, 3)); }) == errc::non_square);
}

TEST_CASE("determinant is multiplicative and swap-sensitive") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    SplitMix64 gen(17);
    for (int i = 0; i < 100; ++i) {
        const Matrix a = random_matrix(*f, FieldLevel::ext, 3, 3, gen);
        const Matrix b = random_matrix(*f, FieldLevel::ext, 3, 3, gen);
        REQUIRE(det(*f, mul(*f, a, b)) == f->mul(det(*f, a), det(*f, b)));
        REQUIRE((det(*f, a) != 0) == (rank(*f, a) == 3));
    }
    // Swapping two rows negates the determinant.
    const Matrix m = ext_matrix({{3, 1, 0}, {5, 9, 2}, {0, 7, 4}});
    Matrix swapped = m;
    for (std::size_t c = 0; c < 3; ++c) std::swap(swapped.at(0, c), swapped.at(1, c));
    CHECK(det(*f, swapped) == f->neg(det(*f, m)));
}

TEST_CASE("rref is idempotent and preserves the row space") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    SplitMix64 gen(23);
    for (int i = 0; i < 100; ++i) {
        const Matrix m = random_matrix(*f, FieldLevel::ext, 3, 5, gen);
        const Matrix r = rref(*f, m);
        REQUIRE(rref(*f, r) == r);
        REQUIRE(rank(*f, r) == rank(*f, m));
        REQUIRE(rank(*f, vstack(m, r)) == rank(*f, m));
    }
}

TEST_CASE("kernel rows annihilate the matrix") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    SplitMix64 gen(41);
    for (int i = 0; i < 100; ++i) {
        const Matrix m = random_matrix(*f, FieldLevel::ext, 2, 5, gen);
        const Matrix ker = kernel(*f, m);
        REQUIRE(ker.rows == 5 - rank(*f, m));
        REQUIRE(ker.cols == 5);
        if (ker.rows > 0) {
            REQUIRE(rank(*f, ker) == ker.rows);
            REQUIRE(is_zero(mul(*f, m, transpose(ker))));
        }
    }
}

TEST_CASE("mul, transpose, stacking and submatrix fit together") {
    const FieldPtr f = make_field(2, 4);
    SplitMix64 gen(5);
    const Matrix m = random_matrix(*f, FieldLevel::ext, 3, 6, gen);
    CHECK(transpose(transpose(m)) == m);
    CHECK(hstack(submatrix(m, 0, 0, 3, 2), submatrix(m, 0, 2, 3, 4)) == m);
    CHECK(vstack(submatrix(m, 0, 0, 1, 6), submatrix(m, 1, 0, 2, 6)) == m);
    const Matrix id = Matrix::identity(FieldLevel::ext, 3);
    CHECK(mul(*f, id, m) == m);

    CHECK(code_of([&] { mul(*f, m, m); }) == errc::dimension_mismatch);
    CHECK(code_of([&] { hstack(m, transpose(m)); }) == errc::dimension_mismatch);
    CHECK(code_of([&] { vstack(m, transpose(m)); }) == errc::dimension_mismatch);
    CHECK(code_of([&] { submatrix(m, 0, 0, 4, 4); }) == errc::dimension_mismatch);
}

TEST_CASE("validate_matrix polices levels") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    Matrix base = base_matrix({{0, 1, 2}});
    CHECK_NOTHROW(validate_matrix(*f, base));
    base.at(0, 1) = 3;  // alpha is not a base-field value
    CHECK(code_of([&] { validate_matrix(*f, base); }) == errc::field_mismatch);
    Matrix ext = ext_matrix({{0, 80}});
    CHECK_NOTHROW(validate_matrix(*f, ext));
    ext.at(0, 1) = 81;
    CHECK(code_of([&] { validate_matrix(*f, ext); }) == errc::field_mismatch);
}

TEST_CASE("frozen maximal minors of the length-4 generator over F_3^5") {
    const FieldPtr f = make_field(3, 5, {1, 1, 2, 0, 0, 1});
    const Fqm a = f->alpha();
    const Matrix g = ext_matrix({{1, 0, a, f->pow(a, 2)}, {0, 1, f->pow(a, 2), f->mul(2, a)}});
    const std::vector<Fqm> expected{1, 9, 6, 6, 18, 180};
    CHECK(maximal_minors(*f, g) == expected);
}

TEST_CASE("maximal minors: order, degenerate shapes, errors") {
    const FieldPtr f = make_field(2, 4);
    const Matrix g = hstack(Matrix::identity(FieldLevel::ext, 2), Matrix(FieldLevel::ext, 2, 2));
    // Column pairs in lex order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
    CHECK(maximal_minors(*f, g) == std::vector<Fqm>{1, 0, 0, 0, 0, 0});

    const Matrix sq = ext_matrix({{3, 1}, {2, 5}});
    CHECK(maximal_minors(*f, sq) == std::vector<Fqm>{det(*f, sq)});

    CHECK(code_of([&] { maximal_minors(*f, transpose(g)); }) == errc::rows_exceed_cols);
}

TEST_CASE("expand_to_base sends the power basis to unit vectors") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    const Fqm a = f->alpha();
    const std::vector<Fqm> powers{1, a, f->pow(a, 2), f->pow(a, 3)};
    const Matrix e = expand_to_base(*f, powers);
    CHECK(e.level == FieldLevel::base);
    CHECK(e == Matrix::identity(FieldLevel::base, 4));

    const std::vector<Fqm> zeros(4, 0);
    CHECK(is_zero(expand_to_base(*f, zeros)));
    CHECK(vector_rank(*f, powers) == 4);
    CHECK(vector_rank(*f, zeros) == 0);

    // Base-field vectors have rank weight at most 1.
    const std::vector<Fqm> flat{1, 2, 1, 0};
    CHECK(vector_rank(*f, flat) == 1);
}

TEST_CASE("scaling by a nonzero field element preserves rank weight") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    SplitMix64 gen(59);
    for (int i = 0; i < 200; ++i) {
        std::vector<Fqm> v(4);
        for (auto& x : v) x = static_cast<Fqm>(gen.below(f->size()));
        const Fqm lambda = 1 + static_cast<Fqm>(gen.below(f->order()));
        std::vector<Fqm> lv(4);
        for (std::size_t j = 0; j < 4; ++j) lv[j] = f->mul(lambda, v[j]);
        REQUIRE(vector_rank(*f, lv) == vector_rank(*f, v));
    }
}

TEST_CASE("rank is invariant under transpose and invertible factors") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    SplitMix64 gen(61);
    for (int i = 0; i < 100; ++i) {
        const Matrix m = random_matrix(*f, FieldLevel::ext, 3, 4, gen);
        REQUIRE(rank(*f, m) == rank(*f, transpose(m)));
        const Matrix a = random_invertible(*f, FieldLevel::ext, 3, gen);
        REQUIRE(rank(*f, mul(*f, a, m)) == rank(*f, m));
    }
}

TEST_CASE("moore rows built from a vector are independent up to its rank weight") {
    // If v has rank weight r, the r rows v^[0], v^[s], ..., v^[(r-1)s] are
    // linearly independent over the extension whenever gcd(s, m) = 1.
    for (const FieldPtr& f : {make_field(3, 4, {2, 0, 0, 2, 1}), make_field(2, 4)}) {
        SplitMix64 gen(67);
        for (int i = 0; i < 200; ++i) {
            std::vector<Fqm> v(4);
            for (auto& x : v) x = static_cast<Fqm>(gen.below(f->size()));
            const std::size_t r = vector_rank(*f, v);
            if (r == 0) continue;
            for (unsigned s = 1; s < f->m(); ++s) {
                if (std::gcd(s, f->m()) != 1) continue;
                Matrix moore(FieldLevel::ext, r, 4);
                for (std::size_t row = 0; row < r; ++row)
                    for (std::size_t col = 0; col < 4; ++col)
                        moore.at(row, col) = f->frobenius(v[col], static_cast<unsigned>(row) * s);
                REQUIRE(rank(*f, moore) == r);
            }
        }
    }
}

TEST_CASE("entrywise frobenius preserves rank") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    SplitMix64 gen(71);
    for (int i = 0; i < 200; ++i) {
        const Matrix m = random_matrix(*f, FieldLevel::ext, 2, 4, gen);
        const unsigned s = static_cast<unsigned>(gen.below(f->m()));
        const Matrix ms = frobenius_entrywise(*f, m, s);
        REQUIRE(rank(*f, ms) == rank(*f, m));
        for (std::size_t idx = 0; idx < m.entries.size(); ++idx)
            REQUIRE(ms.entries[idx] == f->frobenius(m.entries[idx], s));
    }
    CHECK(code_of([&] { frobenius_entrywise(*f, Matrix(FieldLevel::base, 1, 1), 1); }) ==
          errc::field_mismatch);
}

TEST_CASE("intersection_dim") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    const Fqm a = f->alpha();
    Matrix g(FieldLevel::ext, 2, 4);
    for (std::size_t col = 0; col < 4; ++col) {
        g.at(0, col) = f->pow(a, static_cast<std::int64_t>(col));
        g.at(1, col) = f->frobenius(g.at(0, col), 1);
    }
    CHECK(intersection_dim(*f, g, g) == 2);
    // A Gabidulin code meets its Frobenius image in dimension k - 1.
    CHECK(intersection_dim(*f, g, frobenius_entrywise(*f, g, 1)) == 1);

    const Matrix left = ext_matrix({{1, 0, 0, 0}});
    const Matrix right = ext_matrix({{0, 0, 0, 1}});
    CHECK(intersection_dim(*f, left, right) == 0);

    const Matrix deficient = ext_matrix({{1, 1, 1, 1}, {1, 1, 1, 1}});
    CHECK(code_of([&] { intersection_dim(*f, deficient, g); }) == errc::rank_deficient_input);
    CHECK(code_of([&] { intersection_dim(*f, left, ext_matrix({{1, 0}})); }) == errc::dimension_mismatch);
}

TEST_CASE("base-level elimination agrees with integer arithmetic mod q") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    // Over F_3: det [[1,2],[2,2]] = 2 - 4 = -2 = 1 mod 3.
    CHECK(det(*f, base_matrix({{1, 2}, {2, 2}})) == 1);
    CHECK(rank(*f, base_matrix({{1, 2}, {2, 1}})) == 1);  // second row = 2 * first
    CHECK(rank(*f, base_matrix({{1, 2}, {2, 2}})) == 2);
}
