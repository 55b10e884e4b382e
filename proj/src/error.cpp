#include "abcodes/error.hpp"

namespace abcodes {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::EvenDegree: return "EvenDegree";
    case ErrorCode::EvenM: return "EvenM";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::CodeTooLarge: return "CodeTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NonzeroAtZero: return "NonzeroAtZero";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::WeightNotRealized: return "WeightNotRealized";
    case ErrorCode::NonIntegralLambda: return "NonIntegralLambda";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::DualNotMinimal: return "DualNotMinimal";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_resource_error(ErrorCode code) noexcept
{
    return code == ErrorCode::FieldTooLarge || code == ErrorCode::CodeTooLarge
        || code == ErrorCode::TooLarge;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what)
    , code_(code)
{
}

void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace abcodes
