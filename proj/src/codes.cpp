#include "rankcodes/codes.hpp"

#include <numeric>
#include <string>

namespace rankcodes {
namespace {

constexpr std::uint64_t kDistanceBudget = std::uint64_t{1} << 24;

void validate_code_shape(const Field& field, const Matrix& generator, bool allow_empty) {
    if (generator.level != FieldLevel::ext) {
        fail(errc::field_mismatch, "generator must live over the extension field");
    }
    validate_matrix(field, generator);
    if (generator.cols < 1) fail(errc::bad_input, "code length must be at least 1");
    if (!allow_empty && generator.rows < 1) fail(errc::bad_input, "code dimension must be at least 1");
    if (generator.rows > generator.cols) {
        fail(errc::rank_deficient_generator, "more rows than columns cannot be full rank");
    }
    if (generator.cols > field.m()) {
        fail(errc::length_exceeds_degree,
             "length " + std::to_string(generator.cols) + " exceeds extension degree " + std::to_string(field.m()));
    }
}

}  // namespace

RankCode::RankCode(FieldPtr field, Matrix generator) : field_(std::move(field)), generator_(std::move(generator)) {
    validate_code_shape(*field_, generator_, /*allow_empty=*/true);
    if (rank(*field_, generator_) != generator_.rows) {
        fail(errc::rank_deficient_generator, "generator rows are linearly dependent");
    }
}

const Matrix& RankCode::rref_generator() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->rref) cache_->rref = rref(*field_, generator_);
    return *cache_->rref;
}

const Matrix& RankCode::systematic_form() const {
    const Matrix& r = rref_generator();
    std::lock_guard lock(cache_->mu);
    if (!cache_->systematic) {
        // The row space has an [I_k | X] generator exactly when the RREF
        // pivots sit in the first k columns.
        for (std::size_t i = 0; i < r.rows; ++i) {
            if (r.at(i, i) != 1) {
                fail(errc::singular_leading_block, "leading k x k block of the row space is singular");
            }
        }
        cache_->systematic = r;
    }
    return *cache_->systematic;
}

const Matrix& RankCode::dual_generator() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->dual) cache_->dual = kernel(*field_, generator_);
    return *cache_->dual;
}

RankCode new_code(FieldPtr field, Matrix generator) {
    validate_code_shape(*field, generator, /*allow_empty=*/false);
    return RankCode(std::move(field), std::move(generator));
}

RankCode gabidulin(FieldPtr field, const MooreSpec& spec) {
    const std::size_t n = spec.g.size();
    const unsigned m = field->m();
    if (std::gcd(spec.s, m) != 1) {
        fail(errc::bad_step, "Frobenius step s = " + std::to_string(spec.s) + " shares a factor with m");
    }
    if (spec.k < 1 || spec.k > n) fail(errc::bad_input, "Moore matrix needs 1 <= k <= n rows");
    if (n > m || vector_rank(*field, spec.g) != n) {
        fail(errc::dependent_evaluation_points, "evaluation points must be linearly independent over F_q");
    }
    Matrix generator(FieldLevel::ext, spec.k, n);
    for (std::size_t i = 0; i < spec.k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            generator.at(i, j) = field->frobenius(spec.g[j], static_cast<unsigned>(i) * spec.s % m);
        }
    }
    return RankCode(std::move(field), std::move(generator));
}

RankCode dual(const RankCode& code) { return RankCode(code.field(), code.dual_generator()); }

RankCode frobenius_code(const RankCode& code, unsigned s) {
    return RankCode(code.field(), frobenius_entrywise(*code.field(), code.generator(), s));
}

std::size_t codeword_rank(const RankCode& code, std::span<const Fqm> coeffs) {
    const Field& f = *code.field();
    if (coeffs.size() != code.k()) fail(errc::dimension_mismatch, "coefficient vector must have length k");
    std::vector<Fqm> word(code.n(), 0);
    for (std::size_t i = 0; i < code.k(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < code.n(); ++j) {
            word[j] = f.add(word[j], f.mul(coeffs[i], code.generator().at(i, j)));
        }
    }
    return vector_rank(f, word);
}

namespace {

// Visits one message per projective class: the first nonzero coefficient is
// normalized to 1, classes ordered by its position, free suffix coefficients
// counting up in canonical value (rightmost fastest). fn receives the
// message, its codeword, and the codeword's rank weight; returning false
// stops the sweep. Errors: zero_input (k = 0), budget_exceeded.
template <class Fn>
void for_each_projective_codeword(const RankCode& code, Fn&& fn) {
    const Field& f = *code.field();
    const std::size_t n = code.n(), k = code.k(), m = f.m();
    if (k == 0) fail(errc::zero_input, "a zero-dimensional code has no nonzero codewords");
    std::uint64_t budget = 1;
    for (std::size_t i = 1; i < k; ++i) {
        budget *= f.size();
        if (budget > kDistanceBudget) {
            fail(errc::budget_exceeded, "projective enumeration q^{m(k-1)} exceeds 2^24");
        }
    }

    std::vector<Fqm> coeffs(k, 0);
    // prefix[i] = sum over rows 0..i of coeffs * generator; keeping partial
    // sums makes the odometer's rightmost-digit steps O(n) instead of O(kn).
    std::vector<std::vector<Fqm>> prefix(k, std::vector<Fqm>(n, 0));
    std::vector<Fq> digits(m);
    Matrix expanded(FieldLevel::base, m, n);

    auto accumulate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Fqm base = i == 0 ? 0 : prefix[i - 1][j];
            prefix[i][j] = coeffs[i] == 0 ? base : f.add(base, f.mul(coeffs[i], code.generator().at(i, j)));
        }
    };

    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(coeffs.begin(), coeffs.end(), 0);
        coeffs[lead] = 1;
        for (std::size_t i = 0; i < k; ++i) accumulate_row(i);
        while (true) {
            const std::vector<Fqm>& word = prefix[k - 1];
            for (std::size_t j = 0; j < n; ++j) {
                f.expand_into(word[j], digits);
                for (std::size_t i = 0; i < m; ++i) expanded.at(i, j) = digits[i];
            }
            if (!fn(static_cast<const std::vector<Fqm>&>(coeffs), word, rank(f, expanded))) return;
            // Odometer over positions lead+1..k-1, rightmost fastest.
            std::size_t pos = k;
            while (pos > lead + 1 && coeffs[pos - 1] + 1 == f.size()) --pos;
            if (pos == lead + 1) break;
            --pos;
            ++coeffs[pos];
            for (std::size_t z = pos + 1; z < k; ++z) coeffs[z] = 0;
            for (std::size_t i = pos; i < k; ++i) accumulate_row(i);
        }
    }
}

}  // namespace

DistanceScan scan_min_rank(const RankCode& code, std::size_t stop_below) {
    DistanceScan best;
    best.min_rank = code.n() + 1;
    for_each_projective_codeword(code, [&](const std::vector<Fqm>& coeffs, const std::vector<Fqm>&, std::size_t r) {
        ++best.scanned;
        if (r < best.min_rank) {
            best.min_rank = r;
            best.argmin_coeffs = coeffs;
            if (stop_below > 0 && r < stop_below) return false;
        }
        return true;
    });
    return best;
}

std::size_t min_rank_distance(const RankCode& code) { return scan_min_rank(code).min_rank; }

std::vector<std::uint64_t> rank_weight_distribution(const RankCode& code) {
    std::vector<std::uint64_t> counts(code.n() + 1, 0);
    for_each_projective_codeword(code, [&](const std::vector<Fqm>&, const std::vector<Fqm>&, std::size_t r) {
        ++counts[r];
        return true;
    });
    return counts;
}

bool same_row_space(const RankCode& a, const RankCode& b) {
    if (!(*a.field() == *b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
    return a.rref_generator() == b.rref_generator();
}

}  // namespace rankcodes
