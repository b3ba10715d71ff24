#include "rankcodes/errors.hpp"

namespace rankcodes {

const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::not_prime: return "NotPrime";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_primitive: return "NotPrimitive";
        case errc::table_budget_exceeded: return "TableBudgetExceeded";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::zero_input: return "ZeroInput";
        case errc::non_square: return "NonSquare";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::rows_exceed_cols: return "RowsExceedCols";
        case errc::rank_deficient_input: return "RankDeficientInput";
        case errc::rank_deficient_generator: return "RankDeficientGenerator";
        case errc::length_exceeds_degree: return "LengthExceedsDegree";
        case errc::dependent_evaluation_points: return "DependentEvaluationPoints";
        case errc::bad_step: return "BadStep";
        case errc::singular_leading_block: return "SingularLeadingBlock";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_mrd: return "NotMrd";
        case errc::dimension_out_of_range: return "DimensionOutOfRange";
        case errc::gamma_rejected: return "GammaRejected";
        case errc::mrd_check_failed: return "MrdCheckFailed";
        case errc::singular_matrix: return "SingularA";
        case errc::entry_in_base_field: return "EntryInBaseField";
        case errc::bad_shard: return "BadShard";
        case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

}  // namespace rankcodes
