#pragma once

#include <stdexcept>
#include <string>

namespace logdiv {

enum class errc {
  context_mismatch,
  index_out_of_range,
  dimension_mismatch,
  not_divisible,
  division_by_zero,
  not_square,
  budget_exceeded,
  not_logarithmic,
  determinant_not_unit_multiple,
  no_free_basis_found,
  point_not_on_divisor,
  not_singular,
  size_mismatch,
  internal_error,
  syntax_error,
  unknown_variable,
  zero_denominator,
  io_error,
  schema_error,
  not_reduced,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::context_mismatch: return "ContextMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_divisible: return "NotDivisible";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_square: return "NotSquare";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_logarithmic: return "NotLogarithmic";
    case errc::determinant_not_unit_multiple: return "DeterminantNotUnitMultiple";
    case errc::no_free_basis_found: return "NoFreeBasisFound";
    case errc::point_not_on_divisor: return "PointNotOnDivisor";
    case errc::not_singular: return "NotSingular";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::internal_error: return "InternalError";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::io_error: return "IoError";
    case errc::schema_error: return "SchemaError";
    case errc::not_reduced: return "NotReduced";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace logdiv
