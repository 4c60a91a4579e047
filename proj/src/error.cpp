#include "knotpoly/error.hpp"

namespace knotpoly {

std::string_view errorCodeName(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidDiagram: return "InvalidDiagram";
  case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorCode::NotAlternating: return "NotAlternating";
  case ErrorCode::MixedSigns: return "MixedSigns";
  case ErrorCode::NotReduced: return "NotReduced";
  case ErrorCode::NonIntegralShift: return "NonIntegralShift";
  case ErrorCode::NonIntegralExponent: return "NonIntegralExponent";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::HasLoops: return "HasLoops";
  case ErrorCode::BadArgument: return "BadArgument";
  case ErrorCode::EdgeNotFound: return "EdgeNotFound";
  case ErrorCode::ContractLoop: return "ContractLoop";
  case ErrorCode::NotCheckerboard: return "NotCheckerboard";
  case ErrorCode::IoError: return "IoError";
  case ErrorCode::CsvError: return "CsvError";
  }
  return "Error";
}

} // namespace knotpoly
