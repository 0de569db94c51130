#pragma once

#include <stdexcept>
#include <string>

namespace kumk3 {

// Base class for all domain errors raised by the library. Input problems
// (parse errors, bad levels, degenerate forms) all derive from this; anything
// else escaping the library is a bug.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define KUMK3_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

// quadratic forms
KUMK3_DEFINE_ERROR(DegenerateForm);
KUMK3_DEFINE_ERROR(NotSymmetric);
KUMK3_DEFINE_ERROR(InvalidPlace);
KUMK3_DEFINE_ERROR(InconsistentProfile);
KUMK3_DEFINE_ERROR(ZeroScale);

// catalogue
KUMK3_DEFINE_ERROR(UnknownName);
KUMK3_DEFINE_ERROR(ParseError);

// clifford
KUMK3_DEFINE_ERROR(RankTooSmall);
KUMK3_DEFINE_ERROR(NonInvertibleAnchor);
KUMK3_DEFINE_ERROR(NotGradeOne);

// torsion model
KUMK3_DEFINE_ERROR(BadLevel);
KUMK3_DEFINE_ERROR(NotTwoTorsion);
KUMK3_DEFINE_ERROR(LevelMismatch);
KUMK3_DEFINE_ERROR(ZeroTau);
KUMK3_DEFINE_ERROR(LevelTooLargeForExhaustive);
KUMK3_DEFINE_ERROR(NotAPerfectPower);
KUMK3_DEFINE_ERROR(ZeroDivisor);

#undef KUMK3_DEFINE_ERROR

} // namespace kumk3
