#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace persist {

enum class Errc {
  Domain,
  NonInvertibleConstantTerm,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  InexactDivision,
  DivisionByZeroTheta,
  Length,
  CapExceeded,
  Unreachable,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace persist
