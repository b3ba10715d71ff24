#include "rankcodes/search.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "rankcodes/rng.hpp"

namespace rankcodes {
namespace {

constexpr std::uint64_t kShardBudget = std::uint64_t{1} << 32;

struct Tally {
    std::uint64_t scanned = 0;
    std::uint64_t non_mrd = 0;
    std::uint64_t mrd_gabidulin = 0;
    std::uint64_t mrd_non_gabidulin = 0;
    std::vector<Exemplar> exemplars;
};

void validate_space(const SearchSpace& space) {
    if (!space.field) fail(errc::bad_input, "search space needs a field");
    if (space.k < 1 || space.k >= space.n) fail(errc::bad_input, "search needs 1 <= k < n");
    if (space.n > space.field->m()) {
        fail(errc::length_exceeds_degree, "search length exceeds extension degree");
    }
    if (space.shard_total == 0 || space.shard_index >= space.shard_total) {
        fail(errc::bad_shard, "shard index must satisfy index < total, total >= 1");
    }
}

// Number of X candidates, saturating at UINT64_MAX.
std::uint64_t cell_count(const Field& field, std::size_t cells) {
    const std::uint64_t d = field.size() - field.q();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (count > UINT64_MAX / d) return UINT64_MAX;
        count *= d;
    }
    return count;
}

// Decodes candidate index into the X block: base-(q^m - q) digits, most
// significant digit first across row-major entries, digit t = element q + t.
void fill_exhaustive(const Field& field, std::uint64_t index, Matrix& x) {
    const std::uint64_t d = field.size() - field.q();
    for (std::size_t e = x.entries.size(); e-- > 0;) {
        x.entries[e] = static_cast<Fqm>(field.q() + index % d);
        index /= d;
    }
}

void fill_random(const Field& field, std::uint64_t seed, std::uint64_t sample, Matrix& x) {
    SplitMix64 rng(mix_seed(seed, sample));
    const std::uint64_t d = field.size() - field.q();
    for (Fqm& e : x.entries) e = static_cast<Fqm>(field.q() + rng.below(d));
}

void classify_into(const SearchSpace& space, const Matrix& x, std::uint64_t index, Tally& tally) {
    const CandidateVerdict verdict = classify_candidate(space.field, space.n, space.k, x);
    ++tally.scanned;
    switch (verdict.classification) {
        case Classification::non_mrd:
            ++tally.non_mrd;
            break;
        case Classification::mrd_gabidulin:
            ++tally.mrd_gabidulin;
            break;
        case Classification::mrd_non_gabidulin:
            ++tally.mrd_non_gabidulin;
            if (tally.exemplars.size() < space.max_exemplars) {
                Matrix generator(FieldLevel::ext, space.k, space.n);
                for (std::size_t i = 0; i < space.k; ++i) {
                    generator.at(i, i) = 1;
                    for (std::size_t j = 0; j < space.n - space.k; ++j) {
                        generator.at(i, space.k + j) = x.at(i, j);
                    }
                }
                tally.exemplars.push_back({index, std::move(generator)});
            }
            break;
    }
}

}  // namespace

CandidateVerdict classify_candidate(const FieldPtr& field, std::size_t n, std::size_t k, const Matrix& x) {
    if (!field) fail(errc::bad_input, "classify_candidate needs a field");
    if (k < 1 || k >= n) fail(errc::bad_input, "classification needs 1 <= k < n");
    if (x.level != FieldLevel::ext || x.rows != k || x.cols != n - k) {
        fail(errc::dimension_mismatch, "X block must be k x (n-k) over the extension field");
    }
    validate_matrix(*field, x);
    for (Fqm e : x.entries) {
        if (field->in_base_field(e)) {
            fail(errc::entry_in_base_field,
                 "entry " + std::to_string(e) + " lies in F_q; systematic MRD blocks never do");
        }
    }
    Matrix generator(FieldLevel::ext, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        generator.at(i, i) = 1;
        for (std::size_t j = 0; j < n - k; ++j) generator.at(i, k + j) = x.at(i, j);
    }
    const RankCode code = new_code(field, std::move(generator));

    CandidateVerdict verdict;
    verdict.mrd = is_mrd_minor(code);
    if (!verdict.mrd.is_mrd) {
        verdict.classification = Classification::non_mrd;
        return verdict;
    }
    verdict.gabidulin = detect_gabidulin(code, /*assume_mrd=*/true);
    verdict.classification = verdict.gabidulin->is_generalized_gabidulin ? Classification::mrd_gabidulin
                                                                         : Classification::mrd_non_gabidulin;
    return verdict;
}

SearchReport run_search(const SearchSpace& space) {
    validate_space(space);
    const auto start = std::chrono::steady_clock::now();
    const Field& f = *space.field;
    const std::size_t cells = space.k * (space.n - space.k);
    const std::uint64_t total = cell_count(f, cells);
    const unsigned jobs = std::max(1u, space.jobs);

    // This shard owns indices congruent to shard_index mod shard_total; its
    // t-th candidate has global index shard_index + t * shard_total.
    std::uint64_t slice = 0;
    if (space.mode == SearchMode::exhaustive) {
        slice = total / space.shard_total + (space.shard_index < total % space.shard_total ? 1 : 0);
        if (slice > kShardBudget) {
            fail(errc::budget_exceeded, "shard slice exceeds 2^32 candidates; raise shard_total");
        }
    } else {
        slice = space.sample_count / space.shard_total +
                (space.shard_index < space.sample_count % space.shard_total ? 1 : 0);
    }

    std::vector<Tally> tallies(jobs);
    auto worker = [&](unsigned w) {
        Matrix x(FieldLevel::ext, space.k, space.n - space.k);
        for (std::uint64_t t = w; t < slice; t += jobs) {
            const std::uint64_t index = space.shard_index + t * space.shard_total;
            if (space.mode == SearchMode::exhaustive) {
                fill_exhaustive(f, index, x);
            } else {
                fill_random(f, space.seed, index, x);
            }
            classify_into(space, x, index, tallies[w]);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }

    SearchReport report;
    report.shard_index = space.shard_index;
    report.shard_total = space.shard_total;
    report.max_exemplars = space.max_exemplars;
    for (const Tally& t : tallies) {
        report.candidates_scanned += t.scanned;
        report.non_mrd += t.non_mrd;
        report.mrd_gabidulin += t.mrd_gabidulin;
        report.mrd_non_gabidulin += t.mrd_non_gabidulin;
        report.exemplars.insert(report.exemplars.end(), t.exemplars.begin(), t.exemplars.end());
    }
    std::sort(report.exemplars.begin(), report.exemplars.end(),
              [](const Exemplar& a, const Exemplar& b) { return a.index < b.index; });
    if (report.exemplars.size() > space.max_exemplars) report.exemplars.resize(space.max_exemplars);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SearchReport merge_reports(const std::vector<SearchReport>& parts) {
    SearchReport merged;
    if (parts.empty()) return merged;
    merged.shard_index = 0;
    merged.shard_total = 1;
    merged.max_exemplars = parts.front().max_exemplars;
    for (const SearchReport& p : parts) {
        merged.candidates_scanned += p.candidates_scanned;
        merged.non_mrd += p.non_mrd;
        merged.mrd_gabidulin += p.mrd_gabidulin;
        merged.mrd_non_gabidulin += p.mrd_non_gabidulin;
        merged.seconds += p.seconds;
        merged.max_exemplars = std::min(merged.max_exemplars, p.max_exemplars);
        merged.exemplars.insert(merged.exemplars.end(), p.exemplars.begin(), p.exemplars.end());
    }
    std::sort(merged.exemplars.begin(), merged.exemplars.end(), [](const Exemplar& a, const Exemplar& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.generator.entries < b.generator.entries;
    });
    merged.exemplars.erase(std::unique(merged.exemplars.begin(), merged.exemplars.end(),
                                       [](const Exemplar& a, const Exemplar& b) {
                                           return a.generator.entries == b.generator.entries;
                                       }),
                           merged.exemplars.end());
    if (merged.exemplars.size() > merged.max_exemplars) merged.exemplars.resize(merged.max_exemplars);
    return merged;
}

}  // namespace rankcodes
