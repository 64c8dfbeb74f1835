#include "shintani/errors.hpp"

namespace shintani {

char const * error_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::BadBasis: return "BadBasis";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::NotIntegralModulus: return "NotIntegralModulus";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::NotTotallyPositive: return "NotTotallyPositive";
    case ErrorCode::NeedUserUnits: return "NeedUserUnits";
    case ErrorCode::BadUnits: return "BadUnits";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::PrincipalitySearchFailed: return "PrincipalitySearchFailed";
    case ErrorCode::NeedUserCones: return "NeedUserCones";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::PoleAtTestPoint: return "PoleAtTestPoint";
    case ErrorCode::LiftSearchFailed: return "LiftSearchFailed";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::NotTotallyNoncritical: return "NotTotallyNoncritical";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NeedGaloisClosure: return "NeedGaloisClosure";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::NotCoprime: return "NotCoprime";
    }
    return "Error";
}

char const * library_version()
{
    return SHINTANI_VERSION;
}

} // namespace shintani
