#include "abcodes/sharing.hpp"

#include "abcodes/detail/parallel.hpp"
#include "abcodes/error.hpp"

#include <algorithm>
#include <numeric>

namespace abcodes {

namespace {

constexpr std::uint64_t kPairScanCap = std::uint64_t{1} << 14;

struct Projective {
    std::vector<std::vector<std::uint32_t>> words;  // first nonzero entry 1
    std::vector<std::vector<std::uint64_t>> supports;
    std::vector<std::uint32_t> weights;
};

Projective projective_words(const LinearCode& code)
{
    if (!power_fits(code.p(), code.dimension(), kPairScanCap))
        fail(ErrorCode::CodeTooLarge, "pairwise scan is capped at p^k <= 2^14");
    const std::size_t blocks = (code.length() + 63) / 64;
    Projective out;
    for_each_codeword(code, [&](std::span<const std::uint32_t> cw) {
        auto lead = std::find_if(cw.begin(), cw.end(), [](std::uint32_t v) { return v != 0; });
        if (lead == cw.end() || *lead != 1)
            return;
        std::vector<std::uint64_t> s(blocks, 0);
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < cw.size(); ++i)
            if (cw[i]) {
                s[i / 64] |= std::uint64_t{1} << (i % 64);
                ++w;
            }
        out.words.emplace_back(cw.begin(), cw.end());
        out.supports.push_back(std::move(s));
        out.weights.push_back(w);
    });
    return out;
}

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

// For each projective word: index of another word whose support lies inside its own, or -1.
std::vector<std::int64_t> find_covered(const Projective& pw)
{
    const std::size_t N = pw.words.size();
    std::vector<std::int64_t> inside(N, -1);
    detail::parallel_chunks(N, [&](std::size_t i) {
        for (std::size_t j = 0; j < N; ++j)
            if (j != i && pw.weights[j] <= pw.weights[i] && subset_of(pw.supports[j], pw.supports[i])) {
                inside[i] = static_cast<std::int64_t>(j);
                return;
            }
    });
    return inside;
}

} // namespace

bool minimality_ratio(const WeightDistribution& wd, std::uint32_t q)
{
    auto lo = wd.min_weight();
    auto hi = wd.max_weight();
    if (!lo)
        fail(ErrorCode::ZeroCode, "minimality ratio needs a nonzero codeword");
    return std::uint64_t{*lo} * q > std::uint64_t{*hi} * (q - 1);
}

MinimalityResult is_minimal_bruteforce(const LinearCode& code)
{
    const auto pw = projective_words(code);
    const auto inside = find_covered(pw);
    MinimalityResult out;
    for (std::size_t i = 0; i < inside.size(); ++i)
        if (inside[i] >= 0) {
            out.minimal = false;
            out.covering = pw.words[i];
            out.covered = pw.words[static_cast<std::size_t>(inside[i])];
            break;
        }
    return out;
}

AccessStructureSummary access_structure(const LinearCode& base, bool dual_minimal)
{
    require(dual_minimal, ErrorCode::DualNotMinimal, "the dual of the base code has not been shown minimal");
    AccessStructureSummary s;
    s.n = base.length();
    s.k = base.dimension();
    s.q = base.p();
    require(s.k < s.n, ErrorCode::InvalidParameter, "the base code must have a nonzero dual");
    s.participants = s.n - 1;
    const BigInt q = s.q;
    s.minimal_access_sets = ipow(q, s.n - s.k - 1);
    s.d = min_distance(base);
    if (s.d == 2) {
        s.dictator_rule = true;
        const Matrix h = nullspace(base.basis(), base.p());
        auto column = [&](std::size_t j) {
            std::vector<std::uint32_t> c(h.rows());
            for (std::size_t i = 0; i < h.rows(); ++i)
                c[i] = h(i, j);
            return c;
        };
        const auto h0 = column(0);
        for (std::uint32_t j = 1; j < s.n; ++j) {
            const auto hj = column(j);
            for (std::uint32_t a = 1; a < s.q; ++a) {
                bool multiple = true;
                for (std::size_t i = 0; i < h0.size() && multiple; ++i)
                    multiple = hj[i] == static_cast<std::uint32_t>((std::uint64_t{a} * h0[i]) % s.q);
                if (multiple) {
                    s.dictators.push_back(j);
                    break;
                }
            }
        }
        s.non_dictator_sets = (q - 1) * ipow(q, s.n - s.k - 2);
        return s;
    }
    if (s.d >= 3) {
        s.democratic = true;
        const std::uint32_t top = std::min(s.n - s.k - 1, s.d - 2);
        for (std::uint32_t t = 1; t <= top; ++t)
            s.coverage[t] = ipow(q - 1, t) * ipow(q, s.n - s.k - (t + 1));
    }
    return s;
}

AccessSetCount enumerate_access_sets(const LinearCode& base)
{
    const auto dual = dual_code(base);
    const auto pw = projective_words(dual);
    const auto inside = find_covered(pw);
    AccessSetCount out;
    out.membership.assign(base.length(), 0);
    for (std::size_t i = 0; i < pw.words.size(); ++i) {
        if (inside[i] >= 0)
            continue;
        const auto& w = pw.words[i];
        if (w[0] == 0)
            continue;
        // the p-1 multiples of a minimal word with w[0] != 0 include exactly one with c_0 = 1
        ++out.minimal_access_sets;
        for (std::size_t j = 1; j < w.size(); ++j)
            if (w[j])
                ++out.membership[j];
    }
    return out;
}

} // namespace abcodes
