#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccm {

enum class errc {
  duplicate_abscissa,
  arity_mismatch,
  infinite_dimensional,
  bad_relation,
  algebra_mismatch,
  decomposable,
  projective_input,
  non_split_field,
  bad_dimension_vector,
  not_polynomial_count,
  split_sequence,
  not_a_string,
  rank_too_large,
  dimension_too_large,
  invalid_input,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::duplicate_abscissa: return "DuplicateAbscissa";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::infinite_dimensional: return "InfiniteDimensional";
    case errc::bad_relation: return "BadRelation";
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::decomposable: return "Decomposable";
    case errc::projective_input: return "ProjectiveInput";
    case errc::non_split_field: return "NonSplitField";
    case errc::bad_dimension_vector: return "BadDimensionVector";
    case errc::not_polynomial_count: return "NotPolynomialCount";
    case errc::split_sequence: return "SplitSequence";
    case errc::not_a_string: return "NotAString";
    case errc::rank_too_large: return "RankTooLarge";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ccm
