#pragma once

#include <stdexcept>
#include <string>

namespace rankcodes {

// Every failure the library reports deliberately, keyed so callers can
// dispatch without parsing messages.
enum class errc {
    not_prime,
    not_irreducible,
    not_primitive,
    table_budget_exceeded,
    division_by_zero,
    field_mismatch,
    even_characteristic,
    zero_input,
    non_square,
    dimension_mismatch,
    rows_exceed_cols,
    rank_deficient_input,
    rank_deficient_generator,
    length_exceeds_degree,
    dependent_evaluation_points,
    bad_step,
    singular_leading_block,
    budget_exceeded,
    not_mrd,
    dimension_out_of_range,
    gamma_rejected,
    mrd_check_failed,
    singular_matrix,
    entry_in_base_field,
    bad_shard,
    bad_input,
};

const char* to_string(errc code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rankcodes
