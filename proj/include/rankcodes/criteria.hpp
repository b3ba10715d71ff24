#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "rankcodes/codes.hpp"

namespace rankcodes {

enum class MrdMethod { distance, subspace, minor };

// A codeword of rank weight <= n - k, given by its message coefficients.
struct DistanceWitness {
    std::vector<Fqm> coeffs;
    std::size_t rank = 0;
};

// A full-rank V in F_q^{k x n} with rank(V G^T) < k over F_{q^m}.
struct SubspaceWitness {
    Matrix v;
    std::size_t rank = 0;
};

// A unit upper-triangular A (or invertible A in the full sweep) together
// with the column subset whose maximal minor of G*A vanishes.
struct MinorWitness {
    Matrix a;
    std::vector<std::size_t> minor_cols;
    std::size_t minor_index = 0;
};

using MrdWitness = std::variant<DistanceWitness, SubspaceWitness, MinorWitness>;

struct MrdVerdict {
    bool is_mrd = false;
    MrdMethod method = MrdMethod::minor;
    std::uint64_t checked = 0;   // candidates enumerated
    std::uint64_t failures = 0;  // violations seen (> 1 only without early exit)
    std::optional<MrdWitness> witness;
};

// MRD test by exhausting projective codewords: the code is MRD iff no
// nonzero codeword has rank weight below n - k + 1.
// Errors: budget_exceeded.
MrdVerdict is_mrd_distance(const RankCode& code);

// MRD test over subspaces: the code is MRD iff rank(V G^T) = k over F_{q^m}
// for every full-rank V in F_q^{k x n}. One RREF representative per
// k-dimensional row space suffices because left multiplication by GL_k(q)
// does not change the rank. Errors: budget_exceeded.
MrdVerdict is_mrd_subspace(const RankCode& code);

struct MinorCheckOptions {
    bool early_exit = true;
    // Sweep all of GL_n(q) instead of the unit upper-triangular subgroup;
    // exponentially slower, kept as a cross-check of the reduction.
    bool full_general_linear = false;
};

// MRD test via minors: the code is MRD iff every maximal minor of G*A is
// nonzero for every unit upper-triangular A over F_q. A matrices are swept
// in lexicographic order of their above-diagonal entries (row-major), minors
// in lexicographic column-subset order. Errors: budget_exceeded.
MrdVerdict is_mrd_minor(const RankCode& code, const MinorCheckOptions& options = {});

// Re-runs a failed verdict's witness against the code; true iff the witness
// reproduces the violation it claims.
bool verify_witness(const RankCode& code, const MrdVerdict& verdict);

struct GabidulinVerdict {
    bool is_generalized_gabidulin = false;
    std::vector<unsigned> valid_steps;        // s with dim(C meet C^[s]) = k-1
    std::map<unsigned, std::size_t> dims;     // s -> dim(C meet C^[s])
};

// Decides whether an MRD code is a generalized Gabidulin code: that holds
// for step s iff dim(C meet C^[s]) = k - 1. All s in [1, m) coprime to m are
// examined. The criterion is only valid for MRD codes, so the code is first
// pushed through is_mrd_minor unless assume_mrd is set.
// Errors: dimension_out_of_range (k = 0 or k = n); not_mrd.
GabidulinVerdict detect_gabidulin(const RankCode& code, bool assume_mrd = false);

// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

// Enumeration services backing the checkers, exposed for tests and the
// search kernel. Callbacks return false to stop early.

// Unit upper-triangular n x n matrices over F_q, base level, lexicographic
// by above-diagonal entries (row-major, last entry fastest).
void for_each_ut_star(unsigned q, std::size_t n, const std::function<bool(const Matrix&)>& fn);

// One RREF representative per k-dimensional subspace of F_q^n, ordered by
// pivot-column pattern (lex) then free entries (odometer, last fastest).
void for_each_subspace_rref(unsigned q, std::size_t n, std::size_t k,
                            const std::function<bool(const Matrix&)>& fn);

// All invertible n x n matrices over F_q by filtering the full odometer;
// only viable for tiny q^(n^2). Errors: budget_exceeded.
void for_each_invertible(const Field& field, std::size_t n, const std::function<bool(const Matrix&)>& fn);

}  // namespace rankcodes
