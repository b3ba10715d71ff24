#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankcodes/criteria.hpp"

namespace rankcodes {

// Search over systematic generators [I_k | X] with X entries restricted to
// F_{q^m} \ F_q. The restriction loses nothing: an MRD code has a unique
// systematic generator and its X block never contains base-field entries.
// Candidates are indexed lexicographically by the canonical integers of the
// X entries in row-major order, which fixes the meaning of shard indices
// and exemplar ordering across runs and platforms.

enum class Classification { non_mrd, mrd_gabidulin, mrd_non_gabidulin };

struct CandidateVerdict {
    Classification classification = Classification::non_mrd;
    MrdVerdict mrd;
    std::optional<GabidulinVerdict> gabidulin;  // present iff the code is MRD
};

// X must be k x (n-k), extension level, all entries outside the embedded
// F_q. Errors: entry_in_base_field, bad_input, dimension_mismatch.
CandidateVerdict classify_candidate(const FieldPtr& field, std::size_t n, std::size_t k, const Matrix& x);

enum class SearchMode { exhaustive, random };

struct SearchSpace {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;          // random mode: stream seed
    std::uint64_t sample_count = 0;  // random mode: candidates to draw
    std::size_t shard_index = 0;     // this run handles candidates/samples
    std::size_t shard_total = 1;     //   with index = shard_index mod shard_total
    std::size_t max_exemplars = 4;
    unsigned jobs = 1;
};

struct Exemplar {
    std::uint64_t index = 0;  // candidate index (exhaustive) or sample index
    Matrix generator;         // the full [I_k | X]
};

struct SearchReport {
    std::uint64_t candidates_scanned = 0;
    std::uint64_t non_mrd = 0;
    std::uint64_t mrd_gabidulin = 0;
    std::uint64_t mrd_non_gabidulin = 0;
    std::vector<Exemplar> exemplars;  // lowest-index mrd_non_gabidulin hits
    double seconds = 0.0;
    std::size_t shard_index = 0;
    std::size_t shard_total = 1;
    std::size_t max_exemplars = 4;
};

// Deterministic for a fixed space, independent of jobs. Exhaustive mode
// walks this shard's slice of the lexicographic order; random mode draws
// sample j from a generator seeded by mix_seed(seed, j), so shards and
// workers agree on every sample. Errors: bad_shard, bad_input,
// budget_exceeded (per-shard slice above 2^32 candidates).
SearchReport run_search(const SearchSpace& space);

// Componentwise sum; exemplars are concatenated, deduplicated by generator,
// sorted by index, and truncated to the smallest max_exemplars among parts.
SearchReport merge_reports(const std::vector<SearchReport>& parts);

}  // namespace rankcodes
