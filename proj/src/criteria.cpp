#include "rankcodes/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rankcodes {
namespace {

constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

// q^e, saturating.
std::uint64_t upow(std::uint64_t q, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = saturating_mul(r, q);
    return r;
}

Matrix lift_to_ext(Matrix m) {
    m.level = FieldLevel::ext;
    return m;
}

// Column subsets of {0..n-1} of size k in lexicographic order; fn gets the
// subset and its running index.
template <class Fn>
void for_each_column_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    std::size_t index = 0;
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(cols), index)) return;
        ++index;
        std::size_t i = k;
        while (i > 0 && cols[i - 1] + k - (i - 1) >= n) --i;
        if (i == 0) return;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
}

}  // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k > n) return 0;
    // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]; saturates at UINT64_MAX.
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, k); j > 0; --j) {
            const std::uint64_t scaled = saturating_mul(upow(q, j), row[j]);
            row[j] = row[j - 1] > UINT64_MAX - scaled ? UINT64_MAX : row[j - 1] + scaled;
        }
    }
    return row[k];
}

MrdVerdict is_mrd_distance(const RankCode& code) {
    const std::size_t n = code.n(), k = code.k();
    const DistanceScan scan = scan_min_rank(code, n - k + 1);
    MrdVerdict verdict;
    verdict.method = MrdMethod::distance;
    verdict.checked = scan.scanned;
    verdict.is_mrd = scan.min_rank >= n - k + 1;
    if (!verdict.is_mrd) {
        verdict.failures = 1;
        verdict.witness = DistanceWitness{scan.argmin_coeffs, scan.min_rank};
    }
    return verdict;
}

MrdVerdict is_mrd_subspace(const RankCode& code) {
    const Field& f = *code.field();
    const std::size_t n = code.n(), k = code.k();
    if (gaussian_binomial(n, k, f.q()) > kEnumerationBudget) {
        fail(errc::budget_exceeded, "subspace count exceeds 2^24");
    }
    const Matrix gt = transpose(code.generator());
    MrdVerdict verdict;
    verdict.method = MrdMethod::subspace;
    verdict.is_mrd = true;
    for_each_subspace_rref(f.q(), n, k, [&](const Matrix& v) {
        ++verdict.checked;
        const std::size_t r = rank(f, mul(f, lift_to_ext(v), gt));
        if (r < k) {
            verdict.is_mrd = false;
            verdict.failures = 1;
            verdict.witness = SubspaceWitness{v, r};
            return false;
        }
        return true;
    });
    return verdict;
}

MrdVerdict is_mrd_minor(const RankCode& code, const MinorCheckOptions& options) {
    const Field& f = *code.field();
    const std::size_t n = code.n(), k = code.k();
    const unsigned q = f.q();
    MrdVerdict verdict;
    verdict.method = MrdMethod::minor;
    verdict.is_mrd = true;

    auto test_one = [&](const Matrix& a) {
        ++verdict.checked;
        const std::vector<Fqm> minors = maximal_minors(f, mul(f, code.generator(), lift_to_ext(a)));
        for (std::size_t idx = 0; idx < minors.size(); ++idx) {
            if (minors[idx] != 0) continue;
            ++verdict.failures;
            if (verdict.is_mrd) {
                verdict.is_mrd = false;
                std::vector<std::size_t> cols;
                for_each_column_subset(n, k, [&](const std::vector<std::size_t>& subset, std::size_t i) {
                    if (i == idx) {
                        cols = subset;
                        return false;
                    }
                    return true;
                });
                verdict.witness = MinorWitness{a, cols, idx};
            }
            break;  // count at most one failure per A
        }
        return !options.early_exit || verdict.is_mrd;
    };

    if (options.full_general_linear) {
        for_each_invertible(f, n, test_one);
        return verdict;
    }
    if (upow(q, n * (n - 1) / 2) > kEnumerationBudget) {
        fail(errc::budget_exceeded, "unit upper-triangular count exceeds 2^24");
    }
    for_each_ut_star(q, n, test_one);
    return verdict;
}

bool verify_witness(const RankCode& code, const MrdVerdict& verdict) {
    if (verdict.is_mrd || !verdict.witness) return false;
    const Field& f = *code.field();
    const std::size_t n = code.n(), k = code.k();
    if (const auto* w = std::get_if<DistanceWitness>(&*verdict.witness)) {
        if (w->coeffs.size() != k || std::all_of(w->coeffs.begin(), w->coeffs.end(), [](Fqm c) { return c == 0; })) {
            return false;
        }
        return codeword_rank(code, w->coeffs) == w->rank && w->rank <= n - k;
    }
    if (const auto* w = std::get_if<SubspaceWitness>(&*verdict.witness)) {
        if (w->v.level != FieldLevel::base || w->v.rows != k || w->v.cols != n) return false;
        if (rank(f, w->v) != k) return false;
        const std::size_t r = rank(f, mul(f, lift_to_ext(w->v), transpose(code.generator())));
        return r == w->rank && r < k;
    }
    const auto& w = std::get<MinorWitness>(*verdict.witness);
    if (w.a.level != FieldLevel::base || w.a.rows != n || w.a.cols != n) return false;
    // The unit-triangular sweep and the full GL sweep both only emit
    // invertible column mixers; that is all the replay needs.
    if (rank(f, w.a) != n) return false;
    if (w.minor_cols.size() != k) return false;
    const Matrix ga = mul(f, code.generator(), lift_to_ext(w.a));
    Matrix sq(FieldLevel::ext, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (w.minor_cols[j] >= n) return false;
            sq.at(i, j) = ga.at(i, w.minor_cols[j]);
        }
    }
    return det(f, sq) == 0;
}

GabidulinVerdict detect_gabidulin(const RankCode& code, bool assume_mrd) {
    const Field& f = *code.field();
    const std::size_t k = code.k();
    if (k == 0 || k >= code.n()) {
        fail(errc::dimension_out_of_range, "the intersection criterion needs 1 <= k <= n-1");
    }
    if (!assume_mrd && !is_mrd_minor(code).is_mrd) {
        fail(errc::not_mrd, "the intersection criterion applies to MRD codes only");
    }
    GabidulinVerdict verdict;
    for (unsigned s = 1; s < f.m(); ++s) {
        if (std::gcd(s, f.m()) != 1) continue;
        const Matrix image = frobenius_entrywise(f, code.generator(), s);
        const std::size_t dim = intersection_dim(f, code.generator(), image);
        verdict.dims[s] = dim;
        if (dim == k - 1) verdict.valid_steps.push_back(s);
    }
    verdict.is_generalized_gabidulin = !verdict.valid_steps.empty();
    return verdict;
}

void for_each_ut_star(unsigned q, std::size_t n, const std::function<bool(const Matrix&)>& fn) {
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) positions.emplace_back(i, j);
    }
    Matrix a = Matrix::identity(FieldLevel::base, n);
    std::vector<Fq> vals(positions.size(), 0);
    while (true) {
        for (std::size_t p = 0; p < positions.size(); ++p) a.at(positions[p].first, positions[p].second) = vals[p];
        if (!fn(a)) return;
        std::size_t p = vals.size();
        while (p > 0 && vals[p - 1] + 1 == q) --p;
        if (p == 0) return;
        ++vals[p - 1];
        std::fill(vals.begin() + p, vals.end(), 0);
    }
}

void for_each_subspace_rref(unsigned q, std::size_t n, std::size_t k,
                            const std::function<bool(const Matrix&)>& fn) {
    for_each_column_subset(n, k, [&](const std::vector<std::size_t>& pivots, std::size_t) {
        // Free positions of this pivot pattern, row-major.
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = pivots[i] + 1; j < n; ++j) {
                if (!std::binary_search(pivots.begin(), pivots.end(), j)) free_pos.emplace_back(i, j);
            }
        }
        std::vector<Fq> vals(free_pos.size(), 0);
        while (true) {
            Matrix v(FieldLevel::base, k, n);
            for (std::size_t i = 0; i < k; ++i) v.at(i, pivots[i]) = 1;
            for (std::size_t p = 0; p < free_pos.size(); ++p) v.at(free_pos[p].first, free_pos[p].second) = vals[p];
            if (!fn(v)) return false;
            std::size_t p = vals.size();
            while (p > 0 && vals[p - 1] + 1 == q) --p;
            if (p == 0) return true;  // next pivot pattern
            ++vals[p - 1];
            std::fill(vals.begin() + p, vals.end(), 0);
        }
    });
}

void for_each_invertible(const Field& field, std::size_t n, const std::function<bool(const Matrix&)>& fn) {
    const unsigned q = field.q();
    if (upow(q, n * n) > kEnumerationBudget) {
        fail(errc::budget_exceeded, "full general linear sweep exceeds 2^24 raw candidates");
    }
    Matrix a(FieldLevel::base, n, n);
    while (true) {
        if (rank(field, a) == n && !fn(a)) return;
        std::size_t p = a.entries.size();
        while (p > 0 && a.entries[p - 1] + 1 == q) --p;
        if (p == 0) return;
        ++a.entries[p - 1];
        std::fill(a.entries.begin() + p, a.entries.end(), 0);
    }
}

}  // namespace rankcodes
