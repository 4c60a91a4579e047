#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotpoly {

enum class ErrorCode {
  ParseError,
  InvalidDiagram,
  ZeroPolynomial,
  NotAlternating,
  MixedSigns,
  NotReduced,
  NonIntegralShift,
  NonIntegralExponent,
  TooLarge,
  HasLoops,
  BadArgument,
  EdgeNotFound,
  ContractLoop,
  NotCheckerboard,
  IoError,
  CsvError,
};

std::string_view errorCodeName(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (tests, the CLI) can branch on the kind without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace knotpoly
