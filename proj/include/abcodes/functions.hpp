#pragma once

#include "abcodes/bigint.hpp"
#include "abcodes/galois.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abcodes {

enum class FunctionKind {
    AbGold,                 ///< x^(2^i+1), gcd(i,m)=1
    AbKasami,               ///< x^(2^(2i)-2^i+1), gcd(i,m)=1
    AbWelch,                ///< x^(2^((m-1)/2)+3)
    AbNiho1,                ///< x^(2^((m-1)/2)+2^((m-1)/4)-1), m = 1 mod 4
    AbNiho2,                ///< x^(2^((m-1)/2)+2^((3m-1)/4)-1), m = 3 mod 4
    AbTraceVariant,         ///< x^(2^i+1) + (x^(2^i)+x) Tr(x^(2^i+1)+x), m > 3
    PlanarDembowskiOstrom,  ///< x^(p^t+1), m/gcd(m,t) odd
    PlanarCoulterMatthews,  ///< x^((3^k+1)/2), p=3, k odd, gcd(m,k)=1
    PlanarDingYuan,         ///< x^10 - u x^6 - u^2 x^2, p=3, m odd, u != 0
    Power,                  ///< x^e for an arbitrary exponent; not a catalog entry
};

struct FunctionParams {
    std::optional<std::uint32_t> i{};
    std::optional<std::uint32_t> t{};
    std::optional<std::uint32_t> k{};
    std::optional<Elem> u{};
    std::optional<BigInt> exponent{};
};

/// Stable catalog id ("ab:gold", ..., "planar:dy", "power").
std::string_view function_id(FunctionKind kind);
std::optional<FunctionKind> parse_function_id(std::string_view id);
bool is_almost_bent_kind(FunctionKind kind);
bool is_planar_kind(FunctionKind kind);

/// A catalog function bound to its field. Parameter constraints are checked
/// on construction (InvalidParameter), so a constructed object is always a
/// valid catalog entry.
class NonlinearFunction {
public:
    NonlinearFunction(FunctionKind kind, Field field, FunctionParams params = {});

    FunctionKind kind() const { return kind_; }
    const Field& field() const { return field_; }
    const FunctionParams& params() const { return params_; }
    std::string id() const { return std::string(function_id(kind_)); }
    /// Formula with parameters substituted, e.g. "x^3" or "x^10 - u x^6 - u^2 x^2 (u=1)".
    std::string describe() const;

    Elem operator()(Elem x) const;
    /// Values at every element, indexed by encoding.
    std::vector<Elem> table() const;

private:
    FunctionKind kind_;
    Field field_;
    FunctionParams params_;
    BigInt exponent_;
    BigInt frobenius_;  // 2^i for the trace variant
};

FieldElement evaluate(const NonlinearFunction& f, const FieldElement& x);

enum class Classification { AlmostBent, NotAlmostBent, Planar, NotPlanar, SemiBent, NotSemiBent };

std::string_view classification_name(Classification c);

/// Outcome of an exhaustive property scan. For almost-bent and semi-bent
/// scans `values` is the multiset of spectrum values (value -> multiplicity);
/// for planar scans it is the multiset of difference-map image sizes.
struct SpectrumReport {
    std::map<std::int64_t, std::uint64_t> values;
    Classification classification;

    bool holds() const
    {
        return classification == Classification::AlmostBent || classification == Classification::Planar
            || classification == Classification::SemiBent;
    }
};

/// sum over x of (-1)^Tr(a g(x) + b x), binary fields only.
std::int64_t lambda_value(const NonlinearFunction& g, const FieldElement& a, const FieldElement& b);

/// Boolean table x -> Tr(a g(x)) indexed by encoding.
std::vector<std::uint8_t> component_table(const NonlinearFunction& g, Elem a);

/// Exhaustive check over all a != 0 and all b; m <= 9.
SpectrumReport is_almost_bent(const NonlinearFunction& g);

/// Exhaustive difference-map bijectivity check; p^m <= 3^7.
SpectrumReport is_planar(const NonlinearFunction& f);

std::int64_t walsh_value(const Field& field, std::span<const std::uint8_t> fb, const FieldElement& w);

/// All Walsh values, indexed by the encoding of w (fast Walsh-Hadamard transform).
std::vector<std::int64_t> walsh_spectrum(const Field& field, std::span<const std::uint8_t> fb);

SpectrumReport is_semi_bent(const Field& field, std::span<const std::uint8_t> fb);

} // namespace abcodes
