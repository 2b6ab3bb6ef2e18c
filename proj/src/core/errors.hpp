#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace pforge {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  DimensionMismatch,
  NotASubalgebra,
  TorsionNonzero,
  IrrationalSpectrum,
  Singular,
  NotDiagonalizable,
  NotARepresentation,
  NotDirectSum,
  InvalidStructureConstants,
  JacobiFailure,
  DuplicateEigenvalue,
  PairwiseSumNotSubalgebra,
  NotACasimir,
  ZeroParameter,
  UnknownName,
  StabilizerNotClosed,
  Internal,
};

const char* error_code_name(ErrorCode code);

// Every failure in the core carries a code and an optional witness payload.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what, nlohmann::json witness = nullptr)
      : std::runtime_error(what), code_(code), witness_(std::move(witness))
  {
  }

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

private:
  ErrorCode code_;
  nlohmann::json witness_;
};

}  // namespace pforge
