#include "abcodes/io.hpp"
#include "support.hpp"

using namespace abcodes;

namespace {

LinearCode gold_code(std::uint32_t m, std::uint32_t r)
{
    NonlinearFunction f(FunctionKind::AbGold, make_field(2, m), FunctionParams{.i = 1});
    return build_code(f, canonical_subgroup(f.field(), r));
}

} // namespace

TEST_CASE("generator matrix text round trip")
{
    const LinearCode code = gold_code(5, 3);
    const std::string text = format_generator_matrix(code);
    CHECK(text.rfind("2 31 8\n", 0) == 0);
    const LinearCode back = parse_generator_matrix(text);
    CHECK(back.p() == 2);
    CHECK(back.length() == 31);
    CHECK(back.dimension() == 8);
    CHECK(back.basis() == code.basis());
    CHECK(format_generator_matrix(back) == text);
}

TEST_CASE("generator matrix parse errors")
{
    CHECK_ERROR(parse_generator_matrix(""), ErrorCode::ParseError);
    CHECK_ERROR(parse_generator_matrix("2 3 1\n1 0"), ErrorCode::ParseError);
    CHECK_ERROR(parse_generator_matrix("2 3 1\n1 0 2"), ErrorCode::ParseError);
    CHECK_ERROR(parse_generator_matrix("2 2 1\n1 0 1"), ErrorCode::ParseError);
    CHECK_ERROR(parse_generator_matrix("2 2 2\n1 1\n1 1"), ErrorCode::ParseError);
    CHECK_ERROR(parse_generator_matrix("4 2 1\n1 1"), ErrorCode::NonPrime);
    CHECK(parse_generator_matrix("3 3 1\n1 2 0\n").dimension() == 1);
}

TEST_CASE("weight distribution JSON round trip")
{
    const auto wd = theoretical_wd_planar_p3(5, 5);
    const auto j = to_json(wd);
    CHECK(j["n"] == 242);
    CHECK(j["counts"].is_array());
    CHECK(j["counts"][0]["count"].is_string());
    CHECK(weight_distribution_from_json(j) == wd);
    CHECK(j.dump() == to_json(weight_distribution_from_json(j)).dump());
}

TEST_CASE("csv and text tables")
{
    const auto wd = theoretical_wd_ab(5, 5);
    CHECK(to_csv(wd) == "w,count\n0,1\n12,310\n16,527\n20,186\n");
    const std::string table = to_text_table(wd, "Table");
    CHECK(table.find("Weight w") != std::string::npos);
    CHECK(table.find("| 12       | 310") != std::string::npos);
}

TEST_CASE("code JSON carries provenance")
{
    const auto j = to_json(dual_code(gold_code(5, 5)));
    CHECK(j["n"] == 31);
    CHECK(j["k"] == 21);
    CHECK(j["provenance"]["function_id"] == "ab:gold");
    CHECK(j["provenance"]["chain"] == "code -> dual");
    CHECK(j["generator"].size() == 21);
}
