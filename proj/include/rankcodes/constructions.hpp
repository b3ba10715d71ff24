#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankcodes/codes.hpp"

namespace rankcodes {

// Two explicit 2-row generator families whose codes are MRD but not
// generalized Gabidulin, parameterized by a base-field scalar gamma:
//   construction4: [[1, 0, a, a^2],        [0, 1, a^2,  gamma*a]]  (n = 4)
//   construction5: [[1, 0, a, a^2, a^3],   [0, 1, a^2, a^4, gamma*a]]  (n = 5)
// with a the primitive generator of the field.
enum class ConstructionKind { construction4, construction5 };

// One forbidden value for gamma: colliding with it would re-create the
// intersection pattern of a generalized Gabidulin code. construction5 has a
// plus and a minus variant per step (sign of the middle term of the second
// factor); both are excluded, so an accepted gamma is safe under either
// reading. In characteristic 2 the variants coincide.
struct GammaExclusion {
    unsigned s = 1;            // Frobenius step, gcd(s, m) = 1
    int sign = 0;              // 0 for construction4; +1 / -1 for construction5
    Fqm value = 0;             // the excluded value, as an extension element
    bool in_base_field = false;  // only then can gamma (in F_q) collide at all
    bool collides = false;
};

struct GammaReport {
    ConstructionKind kind = ConstructionKind::construction4;
    Fq gamma = 0;
    bool nonzero_ok = false;
    bool qnr_required = false;            // construction4 wants a non-residue
    bool qnr_ok = false;                  // meaningful only when required
    std::optional<bool> ext_non_residue;  // informational, odd q only
    std::vector<GammaExclusion> exclusions;
    bool pass = false;
};

// Never throws for in-range gamma; failures are encoded in the report.
GammaReport validate_gamma(ConstructionKind kind, const Field& field, Fq gamma);

// Length-4 family. Needs odd q, m >= 4 and an accepted gamma; for m = 4 the
// MRD property is outside the guaranteed regime and is verified by the minor
// criterion before returning. Errors: even_characteristic,
// dimension_out_of_range, gamma_rejected, mrd_check_failed.
RankCode construct4(FieldPtr field, Fq gamma);

// Length-5 family. Needs m >= 5 and an accepted nonzero gamma; for
// 5 <= m <= 7 the MRD property is verified by the minor criterion before
// returning. Errors: dimension_out_of_range, gamma_rejected,
// mrd_check_failed.
RankCode construct5(FieldPtr field, Fq gamma);

struct BuiltinExample {
    std::string name;
    RankCode code;
    bool expected_mrd = true;
    bool expected_gabidulin = false;
};

// The four reference instances: construction4 over F_{3^5}, F_{3^4}, F_{5^4}
// and construction5 over F_{2^8}, each MRD and not generalized Gabidulin.
std::vector<BuiltinExample> builtin_examples();

}  // namespace rankcodes
