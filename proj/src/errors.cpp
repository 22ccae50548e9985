#include "srkit/errors.hpp"

namespace srkit {

const char* errc_name(errc kind) {
  switch (kind) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::no_primitive_root: return "NoPrimitiveRoot";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::syntax_error: return "SyntaxError";
    case errc::exponent_out_of_range: return "ExponentOutOfRange";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_square: return "NotSquare";
    case errc::singular: return "Singular";
    case errc::zero_scalar: return "ZeroScalar";
    case errc::time_budget_exceeded: return "TimeBudgetExceeded";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::too_small: return "TooSmall";
    case errc::not_superregular: return "NotSuperregular";
    case errc::membership_violation: return "MembershipViolation";
    case errc::usage: return "Usage";
  }
  return "Error";
}

}  // namespace srkit
