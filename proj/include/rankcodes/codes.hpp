#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rankcodes/linalg.hpp"

namespace rankcodes {

// An F_{q^m}-linear rank-metric code of length n and dimension k, held as a
// full-row-rank generator matrix. Requires n <= m so that rank weights can
// reach n (the regime where the Singleton bound reads d = n - k + 1).
//
// k = 0 is tolerated as a value (it arises as the dual of the full code) but
// cannot be built through new_code.
class RankCode {
   public:
    RankCode(FieldPtr field, Matrix generator);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return generator_.cols; }
    std::size_t k() const noexcept { return generator_.rows; }
    const Matrix& generator() const noexcept { return generator_; }

    // Generator in reduced row echelon form; canonical for the row space.
    const Matrix& rref_generator() const;

    // [I_k | X] spanning the same row space; singular_leading_block when the
    // leading k x k block of the row space is not invertible (which already
    // rules out MRD).
    const Matrix& systematic_form() const;

    const Matrix& dual_generator() const;

   private:
    FieldPtr field_;
    Matrix generator_;

    struct Cache {
        std::mutex mu;
        std::optional<Matrix> rref;
        std::optional<Matrix> systematic;
        std::optional<Matrix> dual;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Validated public constructor: k >= 1, k <= n <= m, full row rank.
// Errors: bad_input, length_exceeds_degree, rank_deficient_generator.
RankCode new_code(FieldPtr field, Matrix generator);

// Evaluation data for a (generalized) Gabidulin code: row i of the generator
// is the entrywise [i*s]-Frobenius power of g.
struct MooreSpec {
    std::vector<Fqm> g;
    std::size_t k = 0;
    unsigned s = 1;
};

// Errors: bad_step (gcd(s, m) != 1), dependent_evaluation_points (g not
// F_q-independent), bad_input (k out of 1..n).
RankCode gabidulin(FieldPtr field, const MooreSpec& spec);

// The (n-k)-dimensional orthogonal code; its generator annihilates G.
RankCode dual(const RankCode& code);

// Code spanned by the entrywise [s]-Frobenius of the generator.
RankCode frobenius_code(const RankCode& code, unsigned s);

std::size_t codeword_rank(const RankCode& code, std::span<const Fqm> coeffs);

// Result of a projective sweep over the code: the minimum rank weight and
// the message achieving it (empty when the code has no nonzero codewords).
struct DistanceScan {
    std::size_t min_rank = 0;
    std::vector<Fqm> argmin_coeffs;
    std::uint64_t scanned = 0;
};

// Scans one representative per projective class, first nonzero coefficient
// normalized to 1, classes ordered by leading position then by canonical
// value of the free suffix (rightmost coefficient fastest). Stops at the
// first codeword of rank < stop_below when stop_below > 0.
// Errors: zero_input (k = 0), budget_exceeded (q^{m(k-1)} > 2^24).
DistanceScan scan_min_rank(const RankCode& code, std::size_t stop_below = 0);

std::size_t min_rank_distance(const RankCode& code);

// counts[r] = number of projective codeword classes of rank weight r,
// r in 0..n (index 0 stays 0; the zero word is excluded). Scaling by
// F_{q^m}^* preserves rank, so the full distribution is (q^m - 1) times
// this one. Same budget and errors as scan_min_rank.
std::vector<std::uint64_t> rank_weight_distribution(const RankCode& code);

bool same_row_space(const RankCode& a, const RankCode& b);

}  // namespace rankcodes
