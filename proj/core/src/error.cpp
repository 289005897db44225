#include "hbcell/error.hpp"

#include <sstream>

namespace hbcell {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::division_by_zero: return "DIVISION_BY_ZERO";
    case ErrorCode::field_mismatch: return "FIELD_MISMATCH";
    case ErrorCode::bad_prime: return "BAD_PRIME";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::shape_mismatch: return "SHAPE_MISMATCH";
    case ErrorCode::zero_polynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::not_homogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::bad_m_vector: return "BAD_M_VECTOR";
    case ErrorCode::not_lexsegment: return "NOT_LEXSEGMENT";
    case ErrorCode::colength_too_small: return "COLENGTH_TOO_SMALL";
    case ErrorCode::bound_violation: return "BOUND_VIOLATION";
    case ErrorCode::leading_term_mismatch: return "LEADING_TERM_MISMATCH";
    case ErrorCode::wrong_initial_ideal: return "WRONG_INITIAL_IDEAL";
    case ErrorCode::not_groebner: return "NOT_GROEBNER";
    case ErrorCode::move_not_applicable: return "MOVE_NOT_APPLICABLE";
    case ErrorCode::empty_stratum: return "EMPTY_STRATUM";
    case ErrorCode::char_too_small: return "CHAR_TOO_SMALL";
    case ErrorCode::non_termination_guard: return "NON_TERMINATION_GUARD";
    case ErrorCode::internal_reduction_failure: return "INTERNAL_REDUCTION_FAILURE";
    case ErrorCode::structure_violation: return "STRUCTURE_VIOLATION";
  }
  return "UNKNOWN";
}

bool is_internal_defect(ErrorCode code) noexcept {
  return code == ErrorCode::non_termination_guard ||
         code == ErrorCode::internal_reduction_failure ||
         code == ErrorCode::structure_violation;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

namespace {

std::string describe(const std::vector<SlotViolation>& slots) {
  std::ostringstream os;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (k > 0) os << "; ";
    os << "(" << slots[k].row << "," << slots[k].col << ") degree " << slots[k].degree
       << " > bound " << slots[k].bound;
  }
  return os.str();
}

}  // namespace

BoundViolationError::BoundViolationError(std::vector<SlotViolation> slots)
    : Error(ErrorCode::bound_violation, describe(slots)), slots_(std::move(slots)) {}

}  // namespace hbcell
