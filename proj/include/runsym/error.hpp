#pragma once

#include <stdexcept>
#include <string>

namespace runsym {

enum class Errc {
  NotDivisible,
  NonUnitConstantTerm,
  OrderMismatch,
  ZeroPolynomial,
  ConstantPolynomial,
  TooManyDivisors,
  NotAPermutation,
  CapExceeded,
  CheckFailed,
  InvalidArgument,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

// Every precondition or contract failure in the library surfaces as this type.
// Domain *verdicts* (a polynomial whose reciprocal is not 0/1, an unbounded
// expansion) are ordinary return values, not exceptions.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace runsym
