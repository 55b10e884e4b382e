#include "abcodes/sharing.hpp"
#include "support.hpp"

using namespace abcodes;

namespace {

LinearCode ab_code(std::uint32_t m, std::uint32_t r)
{
    auto f = make_field(2, m);
    return build_code(NonlinearFunction(FunctionKind::AbGold, f, FunctionParams{.i = 1}), canonical_subgroup(f, r));
}

LinearCode planar_code(std::uint32_t p, std::uint32_t m, std::uint32_t r)
{
    auto f = make_field(p, m);
    return build_code(NonlinearFunction(FunctionKind::PlanarDembowskiOstrom, f, FunctionParams{.t = 0}),
        canonical_subgroup(f, r));
}

bool supports_nested(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i])
            return false;
    return true;
}

} // namespace

TEST_CASE("minimality ratio")
{
    CHECK(minimality_ratio(theoretical_wd_ab(5, 5), 2));
    CHECK_FALSE(minimality_ratio(theoretical_wd_ab(3, 3), 2));
    CHECK(minimality_ratio(theoretical_wd_planar_p3(3, 3), 3));
    WeightDistribution zero;
    zero.n = 4;
    zero.counts[0] = 1;
    CHECK_ERROR(minimality_ratio(zero, 2), ErrorCode::ZeroCode);
}

TEST_CASE("brute-force minimality")
{
    for (std::uint32_t r = 0; r <= 5; ++r) {
        auto c = ab_code(5, r);
        auto res = is_minimal_bruteforce(c);
        CHECK(res.minimal);
        if (minimality_ratio(enumerate_weight_distribution(c), 2))
            CHECK(res.minimal);
    }
    auto bad = is_minimal_bruteforce(ab_code(3, 3));
    CHECK_FALSE(bad.minimal);
    REQUIRE(bad.covered.has_value());
    CHECK(supports_nested(*bad.covered, *bad.covering));
    CHECK(*bad.covered != *bad.covering);
    CHECK(is_minimal_bruteforce(planar_code(3, 3, 3)).minimal);
    CHECK(is_minimal_bruteforce(LinearCode(3, Matrix::from_rows({{1, 2, 0, 1}}, 4))).minimal);
    CHECK_ERROR(is_minimal_bruteforce(dual_code(ab_code(5, 0))), ErrorCode::CodeTooLarge);
}

TEST_CASE("access structure summaries")
{
    auto base = dual_code(ab_code(5, 5));
    auto s = access_structure(base, true);
    CHECK(s.n == 31);
    CHECK(s.k == 21);
    CHECK(s.d == 5);
    CHECK(s.participants == 30);
    CHECK(s.minimal_access_sets == 512);
    CHECK(s.coverage.size() == 3);
    CHECK(s.coverage.at(1) == 256);
    CHECK(s.coverage.at(2) == 128);
    CHECK(s.coverage.at(3) == 64);
    CHECK(s.democratic);
    CHECK_ERROR(access_structure(base, false), ErrorCode::DualNotMinimal);

    auto tern = access_structure(dual_code(planar_code(3, 3, 3)), true);
    CHECK(tern.minimal_access_sets == 243);
    CHECK(tern.coverage.at(1) == 162);
    CHECK(tern.coverage.at(2) == 108);
    CHECK(tern.coverage.size() == 2);

    auto d2 = access_structure(dual_code(planar_code(3, 3, 1)), true);
    CHECK(d2.d == 2);
    CHECK(d2.dictator_rule);
    CHECK(d2.coverage.empty());
    CHECK(d2.non_dictator_sets == 18);
    auto e = enumerate_access_sets(dual_code(planar_code(3, 3, 1)));
    CHECK(e.minimal_access_sets == d2.minimal_access_sets);
    for (std::uint32_t i = 1; i < 26; ++i) {
        const bool dictator = std::find(d2.dictators.begin(), d2.dictators.end(), i) != d2.dictators.end();
        CHECK(e.membership[i] == (dictator ? 27u : 18u));
    }
}

TEST_CASE("Massey enumeration confirms the counts")
{
    for (auto base : {dual_code(ab_code(5, 5)), dual_code(planar_code(3, 3, 3)), dual_code(ab_code(5, 2))}) {
        auto s = access_structure(base, true);
        auto e = enumerate_access_sets(base);
        CHECK(e.minimal_access_sets == s.minimal_access_sets);
        for (std::size_t i = 1; i < e.membership.size(); ++i)
            CHECK(e.membership[i] == s.coverage.at(1));
    }
}
