#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatlab {

enum class Errc {
  InvalidArgument,
  ParseError,
  BadParameters,
  // field
  ReduciblePolynomial,
  DegreeMismatch,
  ExponentOutOfRange,
  // func
  BadLength,
  EntryOutOfRange,
  ZeroMask,
  BadSplit,
  SingularMatrix,
  // spectra
  NotApn,
  NotBent,
  NonIntegerResult,
  DimensionTooLarge,
  // designs
  TooLarge,
  OverlappingBlocks,
  MismatchedPoints,
  NotBentInChain,
  PartitionFails,
  EmptySupport,
  ShapeMismatch,
  // codes
  UnsupportedDualWeight,
  DualWeightUnverifiable,
  // metric
  LengthMismatch,
  LengthOverCap,
  OddDimension,
  UnsupportedDimension,
  NotExtendable,
  ZeroNotInA,
  UNotInComplement,
};

std::string_view to_string(Errc code) noexcept;

/// Broad class of an error, used by frontends to pick an exit status.
enum class ErrorKind { Input, Scale, Internal };
ErrorKind kind_of(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

inline void require(bool condition, Errc code, const char* detail) {
  if (!condition) fail(code, detail);
}

}  // namespace flatlab
