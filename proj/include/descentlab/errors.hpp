#pragma once

#include <stdexcept>
#include <string>

namespace descentlab {

enum class Errc {
  MismatchedField,
  DivisionByZero,
  FieldTooLarge,
  ZeroPolynomial,
  MismatchedContext,
  SingularMatrix,
  ConstantInInput,
  DegreeExceedsD,
  NotReachedByDmax,
  NotZeroDimensional,
  MembershipFailed,
  ParamOutOfRange,
  LengthMismatch,
  EmptyOrConstant,
  Irreducibility,
  ConfigError,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MismatchedField: return "MismatchedField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::MismatchedContext: return "MismatchedContext";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ConstantInInput: return "ConstantInInput";
    case Errc::DegreeExceedsD: return "DegreeExceedsD";
    case Errc::NotReachedByDmax: return "NotReachedByDmax";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::MembershipFailed: return "MembershipFailed";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyOrConstant: return "EmptyOrConstant";
    case Errc::Irreducibility: return "Irreducibility";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace descentlab
