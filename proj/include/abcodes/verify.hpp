#pragma once

#include "abcodes/codes.hpp"
#include "abcodes/functions.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abcodes {

/// Every catalog instance valid over the field, with the parameter sweep
/// used by the verification suite (all coprime i; t in {0, 1}; k in {1, 3};
/// u in {1, 2, 3}).
std::vector<NonlinearFunction> catalog_functions(const Field& field);

/// (p, [m...]) pairs, written "2:3,5;3:3,5;5:3". An empty string is an empty range.
using VerifyRanges = std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>;
VerifyRanges parse_ranges(std::string_view text);
VerifyRanges default_ranges();

struct Fixture {
    std::uint32_t p = 0, m = 0, r = 0;
    std::string role;  ///< code, dual, extended_dual, dual_of_extended_dual
    std::uint32_t n = 0, k = 0, d = 0;
    std::string label;
};

std::vector<Fixture> parse_fixtures(const nlohmann::json& j);

struct CodeParameters {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::optional<std::uint32_t> d;  ///< absent when neither side is enumerable
};

/// Parameters of one member of the derivation chain, computed structurally.
CodeParameters chain_member_parameters(const CodeChain& chain, std::string_view role);

struct CheckResult {
    std::string claim;    ///< stable label, e.g. "ab-weight-distribution"
    std::string subject;  ///< function and parameters
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyOptions {
    VerifyRanges ranges;
    std::vector<Fixture> fixtures;
    /// Fault injection: runs only the binary distribution checks with one
    /// multiplicity corrupted, which must yield exactly one failure.
    bool self_test = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

VerifyReport verify_all(const VerifyOptions& options);

nlohmann::ordered_json to_json(const VerifyReport& report);

/// Compact "{0:1, 12:310, ...}" rendering.
std::string render_counts(const WeightDistribution& wd);

} // namespace abcodes
