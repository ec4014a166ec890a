#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foxknot {

enum class Errc {
  Parse,
  InvalidArgument,
  Overflow,
  NotDivisible,
  DivisionByZero,
  NotAKnotPolynomial,
  NotPalindromic,
  OddSpan,
  H1RankNotOne,
  ZeroWeightColumn,
  NotCoprime,
  CertificationFailed,
  ResidualTooLarge,
};

std::string_view errc_name(Errc code) noexcept;

// All domain failures are reported through this type; the CLI maps them to
// exit code 1 and prints "error: <Name>: <message>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace foxknot
