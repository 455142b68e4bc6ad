#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsd {

enum class ErrorCode {
  ZeroPolynomial,
  ParseError,
  MassNotOne,
  NegativeProbability,
  Empty,
  ZeroScale,
  OrderTooSmall,
  SupportOutsideInterval,
  BadDegrees,
  BadIntervals,
  EpsilonOutOfRange,
  MOutOfRange,
  RatioTooSmall,
  MeansNotOrdered,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Thrown by every operation that rejects its inputs. The code is the
/// machine-readable part; what() carries a human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hsd
