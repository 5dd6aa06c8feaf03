#pragma once

#include <stdexcept>
#include <string>

namespace unitposet {

// Base of every error raised by the library. Subclasses name the failed
// precondition; the CLI maps them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UNITPOSET_ERROR(Name)                                   \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

UNITPOSET_ERROR(CycleError);
UNITPOSET_ERROR(DimensionMismatch);
UNITPOSET_ERROR(ConvergenceFailure);
UNITPOSET_ERROR(NonSquare);
UNITPOSET_ERROR(SizeMismatch);
UNITPOSET_ERROR(InvalidSummand);
UNITPOSET_ERROR(PosetMismatch);
UNITPOSET_ERROR(NotUnitary);
UNITPOSET_ERROR(NotAdmissible);
UNITPOSET_ERROR(Singular);
UNITPOSET_ERROR(NotAChain);
UNITPOSET_ERROR(NotASemichain);
UNITPOSET_ERROR(WildPoset);
UNITPOSET_ERROR(InclusionViolation);
UNITPOSET_ERROR(IsSemichain);
UNITPOSET_ERROR(ParseError);

#undef UNITPOSET_ERROR

}  // namespace unitposet
