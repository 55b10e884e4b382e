#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abcodes {

/// Stable error identifiers. The names returned by error_name() are part of
/// the CLI contract and must not change.
enum class ErrorCode {
    NonPrime,
    ReducibleModulus,
    MixedFields,
    DivisionByZero,
    DependentBasis,
    RankOutOfRange,
    InvalidParameter,
    InvalidElement,
    OddCharacteristic,
    EvenCharacteristic,
    EvenDegree,
    EvenM,
    FieldTooLarge,
    CodeTooLarge,
    TooLarge,
    NonzeroAtZero,
    NonIntegralResult,
    WeightNotRealized,
    NonIntegralLambda,
    ZeroCode,
    DualNotMinimal,
    ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for the resource-cap errors (exhaustive work would exceed a fixed budget).
bool is_resource_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool cond, ErrorCode code, const std::string& what)
{
    if (!cond)
        fail(code, what);
}

} // namespace abcodes
