#pragma once

#include "abcodes/bigint.hpp"
#include "abcodes/codes.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace abcodes {

/// Sufficient minimality test: w_min / w_max > (q - 1) / q.
bool minimality_ratio(const WeightDistribution& wd, std::uint32_t q);

struct MinimalityResult {
    bool minimal = true;
    /// On failure: `covered` has its support inside that of `covering`, and
    /// the two are not scalar multiples.
    std::optional<std::vector<std::uint32_t>> covered;
    std::optional<std::vector<std::uint32_t>> covering;
};

/// Exhaustive support-cover scan; p^k <= 2^14.
MinimalityResult is_minimal_bruteforce(const LinearCode& code);

struct AccessStructureSummary {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::uint32_t participants = 0;
    BigInt minimal_access_sets;
    /// t -> number of minimal access sets containing a fixed group of t participants.
    std::map<std::uint32_t, BigInt> coverage;
    std::uint32_t d = 0;
    bool democratic = false;
    /// d = 2: participants whose parity-check column is a multiple of column 0
    /// lie in every minimal access set; the others lie in non_dictator_sets.
    bool dictator_rule = false;
    std::vector<std::uint32_t> dictators;
    BigInt non_dictator_sets;
};

/// Scheme from the parity-check side of `base`; `dual_minimal` is the caller's
/// evidence that the dual of base is a minimal code (DualNotMinimal otherwise).
AccessStructureSummary access_structure(const LinearCode& base, bool dual_minimal);

struct AccessSetCount {
    BigInt minimal_access_sets;
    std::vector<std::uint64_t> membership;  ///< per participant 1..n-1 (index 0 unused)
};

/// Massey convention: minimal codewords c of the dual of base with c_0 = 1,
/// each giving the access set supp(c) \ {0}. Enumerates the dual (p^(n-k) <= 2^14).
AccessSetCount enumerate_access_sets(const LinearCode& base);

} // namespace abcodes
