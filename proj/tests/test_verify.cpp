#include "abcodes/verify.hpp"
#include "support.hpp"

#include <algorithm>

using namespace abcodes;

namespace {

std::size_t count_kind(const std::vector<NonlinearFunction>& fs, FunctionKind kind)
{
    return static_cast<std::size_t>(
        std::count_if(fs.begin(), fs.end(), [&](const auto& f) { return f.kind() == kind; }));
}

std::size_t failures_of(const VerifyReport& r, const std::string& claim)
{
    return static_cast<std::size_t>(std::count_if(
        r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.claim == claim && !c.pass; }));
}

} // namespace

TEST_CASE("range parsing")
{
    const auto r = parse_ranges("2:3,5;3:3;5:3");
    REQUIRE(r.size() == 3);
    CHECK(r[0].first == 2);
    CHECK(r[0].second == std::vector<std::uint32_t>{3, 5});
    CHECK(r[2].second == std::vector<std::uint32_t>{3});
    CHECK(parse_ranges("").empty());
    CHECK(default_ranges() == parse_ranges("2:3,5;3:3,5;5:3"));
    CHECK_ERROR(parse_ranges("2"), ErrorCode::ParseError);
    CHECK_ERROR(parse_ranges("2:3,x"), ErrorCode::ParseError);
    CHECK_ERROR(parse_ranges("2:"), ErrorCode::ParseError);
}

TEST_CASE("catalog sweep")
{
    const auto b5 = catalog_functions(make_field(2, 5));
    CHECK(count_kind(b5, FunctionKind::AbGold) == 4);
    CHECK(count_kind(b5, FunctionKind::AbKasami) == 4);
    CHECK(count_kind(b5, FunctionKind::AbNiho1) == 1);
    CHECK(count_kind(b5, FunctionKind::AbNiho2) == 0);
    CHECK(count_kind(b5, FunctionKind::AbTraceVariant) == 4);
    const auto b3 = catalog_functions(make_field(2, 3));
    CHECK(count_kind(b3, FunctionKind::AbTraceVariant) == 0);
    CHECK(count_kind(b3, FunctionKind::AbNiho2) == 1);
    const auto t3 = catalog_functions(make_field(3, 3));
    CHECK(count_kind(t3, FunctionKind::PlanarCoulterMatthews) == 1);
    CHECK(count_kind(t3, FunctionKind::PlanarDingYuan) == 3);
    CHECK(count_kind(catalog_functions(make_field(3, 5)), FunctionKind::PlanarCoulterMatthews) == 2);
    CHECK(count_kind(catalog_functions(make_field(5, 3)), FunctionKind::PlanarDembowskiOstrom) == 2);
    CHECK(catalog_functions(make_field(2, 4)).empty());
}

TEST_CASE("fixture parsing and chain parameters")
{
    const auto j = nlohmann::json::parse(R"({"fixtures":[
        {"p":2,"m":5,"r":5,"role":"dual","n":31,"k":21,"d":5,"label":"optimal"}]})");
    const auto fx = parse_fixtures(j);
    REQUIRE(fx.size() == 1);
    CHECK(fx[0].role == "dual");
    CHECK(fx[0].label == "optimal");
    CHECK_ERROR(parse_fixtures(nlohmann::json::parse(R"({"fixtures":[{"p":2}]})")), ErrorCode::ParseError);

    NonlinearFunction f(FunctionKind::AbGold, make_field(2, 5), FunctionParams{.i = 1});
    const auto chain = derive_chain(build_code(f, canonical_subgroup(f.field(), 5)));
    const auto dual = chain_member_parameters(chain, "dual");
    CHECK(dual.n == 31);
    CHECK(dual.k == 21);
    CHECK(dual.d == 5);
    const auto dd = chain_member_parameters(chain, "dual_of_extended_dual");
    CHECK(dd.n == 32);
    CHECK(dd.k == 11);
    CHECK(dd.d == 12);
    CHECK_ERROR(chain_member_parameters(chain, "bogus"), ErrorCode::InvalidParameter);
}

TEST_CASE("empty and invalid ranges")
{
    CHECK(verify_all({}).checks.empty());
    VerifyOptions opt;
    opt.ranges = parse_ranges("2:4;4:3");
    const auto r = verify_all(opt);
    CHECK(r.checks.size() == 2);
    CHECK(r.failures() == 2);
}

TEST_CASE("self-test reports exactly one failure")
{
    VerifyOptions opt;
    opt.ranges = parse_ranges("2:3");
    opt.self_test = true;
    const auto r = verify_all(opt);
    CHECK(r.checks.size() == 6 * 4);
    CHECK(r.failures() == 1);
    CHECK_FALSE(r.checks.front().pass);
    opt.ranges = parse_ranges("3:3");
    CHECK(verify_all(opt).failures() == 1);
}

TEST_CASE("binary m=5 suite")
{
    VerifyOptions opt;
    opt.ranges = parse_ranges("2:5");
    const auto r = verify_all(opt);
    CHECK(r.checks.size() > 500);
    CHECK(r.passed());
    const auto j = to_json(r);
    CHECK(j["failures"] == 0);
    CHECK(j["results"].size() == r.checks.size());
}

TEST_CASE("binary m=3 suite fails only the top-rank distance claims")
{
    VerifyOptions opt;
    opt.ranges = parse_ranges("2:3");
    const auto r = verify_all(opt);
    CHECK(failures_of(r, "ab-dual-distance") == 6);
    CHECK(failures_of(r, "ab-extended-dual-distance") == 6);
    CHECK(r.failures() == 12);
    for (const auto& c : r.checks)
        if (!c.pass)
            CHECK(c.subject.find("r=3") != std::string::npos);
}

TEST_CASE("render_counts")
{
    CHECK(render_counts(theoretical_wd_ab(5, 5)) == "{0:1, 12:310, 16:527, 20:186}");
}
