#pragma once

#include <stdexcept>
#include <string>

namespace shintani {

enum class ErrorCode {
    NotTotallyReal,
    Reducible,
    BadBasis,
    ZeroElement,
    ZeroIdeal,
    NotIntegralModulus,
    NotInIdeal,
    NotTotallyPositive,
    NeedUserUnits,
    BadUnits,
    ScaleExceeded,
    PrincipalitySearchFailed,
    NeedUserCones,
    DegenerateCone,
    TruncationInsufficient,
    PoleAtTestPoint,
    LiftSearchFailed,
    NotPrimitive,
    NotCritical,
    NotTotallyNoncritical,
    NotDivisible,
    NeedGaloisClosure,
    Unsupported,
    ConfigError,
    NotCoprime,
};

char const * error_name(ErrorCode c);
char const * library_version();

class Error : public std::runtime_error
{
    ErrorCode code_;

  public:
    Error(ErrorCode c, std::string const & what)
        : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c)
    {
    }
    ErrorCode code() const { return code_; }
};

} // namespace shintani
