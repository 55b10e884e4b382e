#include "abcodes/designs.hpp"

#include "abcodes/error.hpp"

#include <algorithm>
#include <set>

namespace abcodes {

namespace {

constexpr std::uint64_t kDesignBudget = 1'000'000'000;

// Rank of a sorted subset in colexicographic order.
std::uint64_t colex_rank(const std::vector<std::uint32_t>& s, const std::vector<std::vector<std::uint64_t>>& C)
{
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        r += C[s[i]][i + 1];
    return r;
}

bool next_subset(std::vector<std::uint32_t>& s, std::uint32_t n)
{
    const std::size_t t = s.size();
    std::size_t i = t;
    while (i-- > 0) {
        if (s[i] < n - t + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < t; ++j)
                s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

bool divisibility_holds(const DesignParams& d)
{
    if (d.t > d.k || d.k > d.n)
        return false;
    for (std::uint32_t i = 0; i <= d.t; ++i) {
        const BigInt den = binomial(d.k - i, d.t - i);
        if ((d.lambda * binomial(d.n - i, d.t - i)) % den != 0)
            return false;
    }
    return true;
}

DesignParams design_params_ab(std::uint32_t m, std::uint32_t r, std::uint32_t k)
{
    const auto wd = theoretical_wd_ext_ab(m, r);
    const std::uint32_t n = wd.n;
    const BigInt a = wd.count(k);
    require(k != 0 && k != n && a != 0, ErrorCode::WeightNotRealized,
        "weight " + std::to_string(k) + " is not a nonzero proper weight of the code");
    DesignParams d;
    d.n = n;
    d.k = k;
    d.t = r == m ? 3 : 1;
    require(k >= d.t, ErrorCode::InvalidParameter,
        "block size " + std::to_string(k) + " is below the strength " + std::to_string(d.t));
    BigInt num, den;
    if (d.t == 3) {
        num = BigInt(k) * (k - 1) * (k - 2) * a;
        den = BigInt(n) * (n - 1) * (n - 2);
    } else {
        num = BigInt(k) * a;
        den = n;
    }
    if (num % den != 0)
        fail(ErrorCode::NonIntegralLambda, "lambda " + to_decimal(num) + "/" + to_decimal(den) + " is not an integer");
    d.lambda = num / den;
    return d;
}

BlockSet extract_blocks(const LinearCode& code, std::uint32_t k)
{
    require(k >= 1 && k <= code.length(), ErrorCode::InvalidParameter, "block size must lie in 1..n");
    std::set<std::vector<std::uint32_t>> supports;
    BlockSet out;
    out.n = code.length();
    out.k = k;
    std::vector<std::uint32_t> support;
    for_each_codeword(code, [&](std::span<const std::uint32_t> cw) {
        std::uint32_t w = 0;
        for (auto v : cw)
            w += v != 0;
        if (w != k)
            return;
        ++out.codewords;
        support.clear();
        for (std::uint32_t i = 0; i < cw.size(); ++i)
            if (cw[i])
                support.push_back(i);
        supports.insert(support);
    });
    out.blocks.assign(supports.begin(), supports.end());
    return out;
}

DesignCheck verify_design(const BlockSet& bs, std::uint32_t t)
{
    const std::uint32_t n = bs.n;
    require(t <= bs.k, ErrorCode::InvalidParameter, "strength exceeds block size");
    for (const auto& b : bs.blocks) {
        require(b.size() == bs.k, ErrorCode::InvalidParameter, "blocks must all have size k");
        for (auto x : b)
            require(x < n, ErrorCode::InvalidParameter, "block point out of range");
    }
    const BigInt subsets = binomial(n, t);
    if (subsets * bs.blocks.size() > kDesignBudget)
        fail(ErrorCode::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(t) + ") x "
                + std::to_string(bs.blocks.size()) + " blocks exceeds the 10^9 budget");

    std::vector<std::vector<std::uint64_t>> C(n + 1, std::vector<std::uint64_t>(t + 2, 0));
    for (std::uint32_t i = 0; i <= n; ++i) {
        C[i][0] = 1;
        for (std::uint32_t j = 1; j <= std::min(i, t + 1); ++j)
            C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0);
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(subsets), 0);
    std::vector<std::uint32_t> pick(t);
    for (const auto& b : bs.blocks) {
        for (std::uint32_t i = 0; i < t; ++i)
            pick[i] = i;
        std::vector<std::uint32_t> sub(t);
        do {
            for (std::uint32_t i = 0; i < t; ++i)
                sub[i] = b[pick[i]];
            ++counts[colex_rank(sub, C)];
        } while (next_subset(pick, bs.k));
    }

    DesignCheck out;
    std::vector<std::uint32_t> s(t);
    for (std::uint32_t i = 0; i < t; ++i)
        s[i] = i;
    const std::uint64_t first = counts[colex_rank(s, C)];
    const std::vector<std::uint32_t> first_subset = s;
    while (next_subset(s, n)) {
        const std::uint64_t c = counts[colex_rank(s, C)];
        if (c != first) {
            out.witness_first = first_subset;
            out.witness_second = s;
            out.count_first = first;
            out.count_second = c;
            return out;
        }
    }
    out.is_design = true;
    out.lambda = first;
    return out;
}

AssmusMattsonReport assmus_mattson(const WeightDistribution& wd, const WeightDistribution& dual_wd, std::uint32_t t)
{
    AssmusMattsonReport rep;
    rep.t = t;
    rep.d = wd.min_weight().value_or(0);
    for (auto w : dual_wd.nonzero_weights())
        if (w + t <= dual_wd.n)
            ++rep.s;
    rep.applicable = rep.d > 0 && t < rep.d && rep.s + t <= rep.d;
    return rep;
}

bool assmus_mattson_applicable(const WeightDistribution& wd, const WeightDistribution& dual_wd, std::uint32_t t)
{
    return assmus_mattson(wd, dual_wd, t).applicable;
}

} // namespace abcodes
