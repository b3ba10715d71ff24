#pragma once

#include <cstdint>

#include "rankcodes/codes.hpp"

namespace rankcodes {

// A semilinear rank isometry (lambda, A, sigma) acting on row vectors by
// v |-> sigma(lambda * v) A, with lambda a nonzero scalar, A invertible over
// F_q, and sigma the Frobenius power x -> x^{[sigma]}. These maps preserve
// rank weights, so they send codes to codes of equal parameters and equal
// minimum distance.
struct Isometry {
    Fqm lambda = 1;
    Matrix a;          // n x n, base level, invertible
    unsigned sigma = 0;  // Frobenius exponent, reduced mod m on use
};

// Errors: zero_input (lambda = 0), dimension_mismatch (A not n x n),
// singular_matrix (A not invertible).
RankCode apply(const RankCode& code, const Isometry& iso);

// Deterministic in (seed): lambda uniform over nonzero scalars, A uniform
// over invertible matrices by rejection, sigma uniform over 0..m-1.
Isometry random_isometry(const Field& field, std::size_t n, std::uint64_t seed);

// Composition in application order: apply(code, compose(f, g, h)) spans the
// same code as apply(apply(code, g), h). Since A has base-field entries it
// commutes with sigma, giving the semidirect-product rule
//   (l, A, i) * (l', A', i') = (l * l'^{[m-i]}, A A', i + i' mod m).
Isometry compose(const Field& field, const Isometry& g, const Isometry& h);

// Cheap invariant screen: false means a and b are certainly not isometric
// (parameters, rank-weight distribution, or Gabidulin verdict differ); true
// means no invariant separates them.
bool possibly_equivalent(const RankCode& a, const RankCode& b);

// Walks the full isometry orbit of a looking for b's row space; exact but
// exponential, guarded to (q^m - 1) * m * q^(n^2) <= 2^24 raw candidates.
// Errors: budget_exceeded.
bool orbit_equivalent(const RankCode& a, const RankCode& b);

}  // namespace rankcodes
