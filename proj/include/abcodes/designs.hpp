#pragma once

#include "abcodes/bigint.hpp"
#include "abcodes/codes.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace abcodes {

/// t-(n, k, lambda) design parameters.
struct DesignParams {
    std::uint32_t t = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    BigInt lambda;

    bool operator==(const DesignParams&) const = default;
};

/// C(k-i, t-i) divides lambda C(n-i, t-i) for every 0 <= i <= t.
bool divisibility_holds(const DesignParams& d);

/// Parameters predicted for the weight-k supports of the [2^m, m+r+1] code:
/// t = 3 when r = m, t = 1 otherwise.
DesignParams design_params_ab(std::uint32_t m, std::uint32_t r, std::uint32_t k);

struct BlockSet {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::vector<std::uint32_t>> blocks;  ///< sorted supports, lexicographic order
    std::uint64_t codewords = 0;                     ///< weight-k codewords seen before deduplication
};

/// Distinct supports of the weight-k codewords.
BlockSet extract_blocks(const LinearCode& code, std::uint32_t k);

struct DesignCheck {
    bool is_design = false;
    BigInt lambda;  ///< common count when is_design
    /// On failure: the first t-subset in lexicographic order and the first
    /// later one whose count differs, with their counts.
    std::optional<std::vector<std::uint32_t>> witness_first;
    std::optional<std::vector<std::uint32_t>> witness_second;
    std::uint64_t count_first = 0;
    std::uint64_t count_second = 0;
};

/// Counts, for every t-subset of points, the blocks containing it.
/// TooLarge when C(n, t) * |blocks| exceeds 10^9.
DesignCheck verify_design(const BlockSet& blocks, std::uint32_t t);

struct AssmusMattsonReport {
    std::uint32_t d = 0;  ///< minimum distance of the code
    std::uint32_t s = 0;  ///< nonzero dual weights in (0, n - t]
    std::uint32_t t = 0;
    bool applicable = false;
};

/// wd is the code, dual_wd its dual; the condition is s <= d - t with t < d.
AssmusMattsonReport assmus_mattson(const WeightDistribution& wd, const WeightDistribution& dual_wd, std::uint32_t t);
bool assmus_mattson_applicable(const WeightDistribution& wd, const WeightDistribution& dual_wd, std::uint32_t t);

} // namespace abcodes
