#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrd {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    NotASubfield,
    NotInImage,
    ShapeMismatch,
    DimensionMismatch,
    NotASubspace,
    ImageNotContained,
    NotABasis,
    NotDivisible,
    DependentBasis,
    DuplicateCodeword,
    TooSmall,
    TooLarge,
    BadRowCount,
    NotLinear,
    BadParameters,
    BadTower,
    BadSubspaceChain,
    EtaConditionViolated,
    P1Violated,
    P2Violated,
    DependentGenerators,
    ParamMismatch,
    NotMRDInput,
    FamilyIncomplete,
    SubcodeNotMRD,
    ReplacementNotMRD,
    TargetOutOfRange,
    ParamOutOfRange,
    NotEnoughCosets,
    SingularA,
    SingularB,
    Empty,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace mrd
