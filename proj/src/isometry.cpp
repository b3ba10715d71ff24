#include "rankcodes/isometry.hpp"

#include "rankcodes/criteria.hpp"
#include "rankcodes/rng.hpp"

namespace rankcodes {
namespace {

Matrix lift_to_ext(Matrix m) {
    m.level = FieldLevel::ext;
    return m;
}

Matrix transformed_generator(const RankCode& code, const Isometry& iso) {
    const Field& f = *code.field();
    Matrix g = code.generator();
    for (Fqm& e : g.entries) e = f.frobenius(f.mul(iso.lambda, e), iso.sigma);
    return mul(f, g, lift_to_ext(iso.a));
}

}  // namespace

RankCode apply(const RankCode& code, const Isometry& iso) {
    const Field& f = *code.field();
    if (iso.lambda == 0) fail(errc::zero_input, "isometry scalar must be nonzero");
    if (iso.a.level != FieldLevel::base || iso.a.rows != code.n() || iso.a.cols != code.n()) {
        fail(errc::dimension_mismatch, "isometry matrix must be n x n over the base field");
    }
    validate_matrix(f, iso.a);
    if (rank(f, iso.a) != code.n()) fail(errc::singular_matrix, "isometry matrix is singular");
    return RankCode(code.field(), transformed_generator(code, iso));
}

Isometry random_isometry(const Field& field, std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Isometry iso;
    iso.lambda = static_cast<Fqm>(1 + rng.below(field.order()));
    iso.a = Matrix(FieldLevel::base, n, n);
    do {
        for (Fqm& e : iso.a.entries) e = static_cast<Fqm>(rng.below(field.q()));
    } while (rank(field, iso.a) != n);
    iso.sigma = static_cast<unsigned>(rng.below(field.m()));
    return iso;
}

Isometry compose(const Field& field, const Isometry& g, const Isometry& h) {
    Isometry out;
    out.lambda = field.mul(g.lambda, field.frobenius(h.lambda, (field.m() - g.sigma % field.m()) % field.m()));
    out.a = mul(field, g.a, h.a);
    out.sigma = (g.sigma + h.sigma) % field.m();
    return out;
}

bool possibly_equivalent(const RankCode& a, const RankCode& b) {
    if (!(*a.field() == *b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
    if (rank_weight_distribution(a) != rank_weight_distribution(b)) return false;
    const bool a_mrd = is_mrd_minor(a).is_mrd;
    if (a_mrd != is_mrd_minor(b).is_mrd) return false;
    if (a_mrd && a.k() < a.n()) {
        if (detect_gabidulin(a, true).is_generalized_gabidulin !=
            detect_gabidulin(b, true).is_generalized_gabidulin) {
            return false;
        }
    }
    return true;
}

bool orbit_equivalent(const RankCode& a, const RankCode& b) {
    if (!(*a.field() == *b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
    const Field& f = *a.field();
    const std::size_t n = a.n();
    std::uint64_t budget = static_cast<std::uint64_t>(f.order()) * f.m();
    for (std::size_t i = 0; i < n * n; ++i) {
        budget *= f.q();
        if (budget > (std::uint64_t{1} << 24)) {
            fail(errc::budget_exceeded, "orbit walk exceeds 2^24 raw candidates");
        }
    }
    if (!possibly_equivalent(a, b)) return false;
    bool found = false;
    for_each_invertible(f, n, [&](const Matrix& mat) {
        Isometry iso;
        iso.a = mat;
        for (std::uint32_t l = 1; l <= f.order() && !found; ++l) {
            iso.lambda = f.antilog(l - 1);
            for (unsigned s = 0; s < f.m() && !found; ++s) {
                iso.sigma = s;
                found = RankCode(a.field(), transformed_generator(a, iso)).rref_generator() == b.rref_generator();
            }
        }
        return !found;
    });
    return found;
}

}  // namespace rankcodes
