#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

enum class Err {
  DivisionByZero,
  FieldMismatch,
  ReducibleMinPoly,
  DegenerateLine,
  DegenerateSpan,
  SamePlane,
  SkewLines,
  NotSkew,
  DegenerateTransversal,
  NotARoot,
  Unsupported,
  InputNotOnSurface,
  DegenerateChart,
  RealnessViolated,
  BadTriple,
  BadPrime,
  NonSplitPrime,
  BadReduction,
  NoGoodPrime,
  ParseError,
  BadInput,
  VerificationFailed,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::ReducibleMinPoly: return "ReducibleMinPoly";
    case Err::DegenerateLine: return "DegenerateLine";
    case Err::DegenerateSpan: return "DegenerateSpan";
    case Err::SamePlane: return "SamePlane";
    case Err::SkewLines: return "SkewLines";
    case Err::NotSkew: return "NotSkew";
    case Err::DegenerateTransversal: return "DegenerateTransversal";
    case Err::NotARoot: return "NotARoot";
    case Err::Unsupported: return "Unsupported";
    case Err::InputNotOnSurface: return "InputNotOnSurface";
    case Err::DegenerateChart: return "DegenerateChart";
    case Err::RealnessViolated: return "RealnessViolated";
    case Err::BadTriple: return "BadTriple";
    case Err::BadPrime: return "BadPrime";
    case Err::NonSplitPrime: return "NonSplitPrime";
    case Err::BadReduction: return "BadReduction";
    case Err::NoGoodPrime: return "NoGoodPrime";
    case Err::ParseError: return "ParseError";
    case Err::BadInput: return "BadInput";
    case Err::VerificationFailed: return "VerificationFailed";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cusp
