#pragma once

#include <stdexcept>
#include <string>

namespace srkit {

enum class errc {
  not_prime,
  reducible_modulus,
  no_primitive_root,
  field_mismatch,
  division_by_zero,
  syntax_error,
  exponent_out_of_range,
  index_out_of_range,
  size_mismatch,
  not_square,
  singular,
  zero_scalar,
  time_budget_exceeded,
  cap_exceeded,
  budget_exceeded,
  too_small,
  not_superregular,
  membership_violation,
  usage,
};

const char* errc_name(errc kind);

class Error : public std::runtime_error {
public:
  Error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw Error(kind, what); }

}  // namespace srkit
