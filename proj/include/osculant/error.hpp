#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace osculant {

enum class Errc {
  NonPrimeModulus,
  MalformedSpec,
  DivisionByZero,
  ZeroVector,
  CoincidentPoints,
  InfiniteField,
  ZeroParameters,
  ZeroScale,
  NotOnGInf,
  SamePoint,
  Char3Unsupported,
  PointOnGInf,
  NotInOmega,
  NotARegulus,
  ProjectionDegenerate,
  WrongCharacteristic,
  DegreeOutOfRange,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::MalformedSpec: return "MalformedSpec";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::ZeroParameters: return "ZeroParameters";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::NotOnGInf: return "NotOnGInf";
    case Errc::SamePoint: return "SamePoint";
    case Errc::Char3Unsupported: return "Char3Unsupported";
    case Errc::PointOnGInf: return "PointOnGInf";
    case Errc::NotInOmega: return "NotInOmega";
    case Errc::NotARegulus: return "NotARegulus";
    case Errc::ProjectionDegenerate: return "ProjectionDegenerate";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the `Errc` codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace osculant
