#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hbcell {

enum class ErrorCode {
  division_by_zero,
  field_mismatch,
  bad_prime,
  parse_error,
  shape_mismatch,
  zero_polynomial,
  not_homogeneous,
  bad_m_vector,
  not_lexsegment,
  colength_too_small,
  bound_violation,
  leading_term_mismatch,
  wrong_initial_ideal,
  not_groebner,
  move_not_applicable,
  empty_stratum,
  char_too_small,
  non_termination_guard,
  internal_reduction_failure,
  structure_violation,
};

/// Upper-snake name used in diagnostics, e.g. "BOUND_VIOLATION".
std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that signal a defect in this library rather than bad input.
bool is_internal_defect(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One slot of a parameter matrix whose degree exceeds its bound (1-based).
struct SlotViolation {
  int row;
  int col;
  int degree;
  int bound;

  friend bool operator==(const SlotViolation&, const SlotViolation&) = default;
};

class BoundViolationError : public Error {
 public:
  explicit BoundViolationError(std::vector<SlotViolation> slots);

  const std::vector<SlotViolation>& slots() const noexcept { return slots_; }

 private:
  std::vector<SlotViolation> slots_;
};

}  // namespace hbcell
