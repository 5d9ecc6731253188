#include "flatlab/error.hpp"

namespace flatlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::BadLength: return "BadLength";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::ZeroMask: return "ZeroMask";
    case Errc::BadSplit: return "BadSplit";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotApn: return "NotApn";
    case Errc::NotBent: return "NotBent";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::TooLarge: return "TooLarge";
    case Errc::OverlappingBlocks: return "OverlappingBlocks";
    case Errc::MismatchedPoints: return "MismatchedPoints";
    case Errc::NotBentInChain: return "NotBentInChain";
    case Errc::PartitionFails: return "PartitionFails";
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::UnsupportedDualWeight: return "UnsupportedDualWeight";
    case Errc::DualWeightUnverifiable: return "DualWeightUnverifiable";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::LengthOverCap: return "LengthOverCap";
    case Errc::OddDimension: return "OddDimension";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::NotExtendable: return "NotExtendable";
    case Errc::ZeroNotInA: return "ZeroNotInA";
    case Errc::UNotInComplement: return "UNotInComplement";
  }
  return "Unknown";
}

ErrorKind kind_of(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionTooLarge:
    case Errc::TooLarge:
    case Errc::LengthOverCap:
    case Errc::UnsupportedDimension:
    case Errc::DualWeightUnverifiable:
      return ErrorKind::Scale;
    case Errc::NonIntegerResult:
      return ErrorKind::Internal;
    default:
      return ErrorKind::Input;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace flatlab
