#pragma once

#include <stdexcept>
#include <string>

namespace graphsep {

enum class ErrorCode {
  InvalidLabel,
  InvalidPartition,
  LoopAsEdge,
  ComplexWeightInRealGraph,
  NonFiniteWeight,
  SizeMismatch,
  NotHermitian,
  NotPSD,
  ZeroDegreeSum,
  NotPure,
  ComplexGraph,
  HasLoops,
  GapZero,
  InvalidInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphsep
