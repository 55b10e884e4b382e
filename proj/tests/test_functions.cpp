#include "abcodes/functions.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace abcodes;

namespace {

NonlinearFunction gold(std::uint32_t m, std::uint32_t i = 1)
{
    return NonlinearFunction(FunctionKind::AbGold, make_field(2, m), FunctionParams{.i = i});
}

NonlinearFunction power(const Field& f, std::uint64_t e)
{
    return NonlinearFunction(FunctionKind::Power, f, FunctionParams{.exponent = BigInt(e)});
}

std::vector<NonlinearFunction> ab_catalog(std::uint32_t m)
{
    auto f = make_field(2, m);
    std::vector<NonlinearFunction> out;
    for (std::uint32_t i = 1; i < m; ++i)
        if (std::gcd(i, m) == 1) {
            out.emplace_back(FunctionKind::AbGold, f, FunctionParams{.i = i});
            out.emplace_back(FunctionKind::AbKasami, f, FunctionParams{.i = i});
            if (m > 3)
                out.emplace_back(FunctionKind::AbTraceVariant, f, FunctionParams{.i = i});
        }
    out.emplace_back(FunctionKind::AbWelch, f);
    if (m % 4 == 1)
        out.emplace_back(FunctionKind::AbNiho1, f);
    else
        out.emplace_back(FunctionKind::AbNiho2, f);
    return out;
}

} // namespace

TEST_CASE("catalog ids round-trip")
{
    for (auto id : {"ab:gold", "ab:kasami", "ab:welch", "ab:niho1", "ab:niho2", "ab:trace", "planar:do", "planar:cm",
             "planar:dy", "power"}) {
        auto k = parse_function_id(id);
        REQUIRE(k.has_value());
        CHECK(function_id(*k) == id);
    }
    CHECK_FALSE(parse_function_id("ab:nope").has_value());
}

TEST_CASE("evaluation worked values")
{
    auto g = gold(3);
    auto f8 = g.field();
    CHECK(evaluate(g, f8.element(2)).encoding() == 3);
    CHECK(g(0) == 0);
    NonlinearFunction sq(FunctionKind::PlanarDembowskiOstrom, make_field(3, 1), FunctionParams{.t = 0});
    CHECK(sq(2) == 1);
    CHECK_ERROR(evaluate(g, make_field(2, 5).element(1)), ErrorCode::MixedFields);
    CHECK(g.describe() == "x^3");
    NonlinearFunction w(FunctionKind::AbWelch, make_field(2, 5));
    CHECK(w.describe() == "x^7");
}

TEST_CASE("power exponents against the naive oracle")
{
    auto f = make_field(2, 5);
    oracle::NaiveField o{2, 5, f.params().modulus};
    NonlinearFunction k(FunctionKind::AbKasami, f, FunctionParams{.i = 2});
    // 2^4 - 2^2 + 1 = 13
    for (Elem x = 0; x < 32; ++x)
        CHECK(k(x) == o.pow(x, 13));
    auto f3 = make_field(3, 5);
    oracle::NaiveField o3{3, 5, f3.params().modulus};
    NonlinearFunction cm(FunctionKind::PlanarCoulterMatthews, f3, FunctionParams{.k = 3});
    for (Elem x = 0; x < 243; x += 7)
        CHECK(cm(x) == o3.pow(x, 14));
}

TEST_CASE("every catalog entry vanishes at zero")
{
    for (std::uint32_t m : {3u, 5u, 7u})
        for (const auto& g : ab_catalog(m))
            CHECK(g(0) == 0);
    auto f = make_field(3, 3);
    CHECK(NonlinearFunction(FunctionKind::PlanarDingYuan, f, FunctionParams{.u = 1})(0) == 0);
}

TEST_CASE("parameter validation")
{
    auto f2 = make_field(2, 5);
    auto f3 = make_field(3, 3);
    CHECK_ERROR(NonlinearFunction(FunctionKind::AbGold, make_field(2, 4), FunctionParams{.i = 1}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::AbGold, make_field(2, 3), FunctionParams{.i = 3}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::AbGold, f2), ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::AbNiho1, make_field(2, 7)), ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::AbNiho2, f2), ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::AbTraceVariant, make_field(2, 3), FunctionParams{.i = 1}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::AbGold, f3, FunctionParams{.i = 1}), ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarDembowskiOstrom, f2, FunctionParams{.t = 0}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarDembowskiOstrom, make_field(3, 2), FunctionParams{.t = 1}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarCoulterMatthews, f3, FunctionParams{.k = 3}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarCoulterMatthews, f3, FunctionParams{.k = 2}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarCoulterMatthews, make_field(5, 3), FunctionParams{.k = 1}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarDingYuan, f3, FunctionParams{.u = 0}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarDingYuan, make_field(3, 2), FunctionParams{.u = 1}),
        ErrorCode::InvalidParameter);
    CHECK_ERROR(NonlinearFunction(FunctionKind::PlanarDingYuan, f3, FunctionParams{.u = 40}),
        ErrorCode::InvalidElement);
}

TEST_CASE("lambda values")
{
    auto g = gold(3);
    const auto& f = g.field();
    CHECK(lambda_value(g, f.element(0), f.element(0)) == 8);
    for (Elem b = 1; b < 8; ++b)
        CHECK(lambda_value(g, f.element(0), f.element(b)) == 0);
    for (Elem a = 1; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) {
            auto v = lambda_value(g, f.element(a), f.element(b));
            CHECK((v == 0 || v == 4 || v == -4));
        }
    NonlinearFunction sq(FunctionKind::PlanarDembowskiOstrom, make_field(3, 3), FunctionParams{.t = 0});
    CHECK_ERROR(lambda_value(sq, sq.field().element(1), sq.field().element(1)), ErrorCode::OddCharacteristic);
}

TEST_CASE("lambda agrees with the oracle trace")
{
    auto g = gold(5, 2);
    const auto& f = g.field();
    oracle::NaiveField o{2, 5, f.params().modulus};
    for (Elem a : {1u, 5u, 30u})
        for (Elem b = 0; b < 32; ++b) {
            std::int64_t s = 0;
            for (std::uint64_t x = 0; x < 32; ++x)
                s += o.trace(o.add(o.mul(a, o.pow(x, 5)), o.mul(b, x))) ? -1 : 1;
            CHECK(lambda_value(g, f.element(a), f.element(b)) == s);
        }
}

TEST_CASE("almost bent catalog at m = 3, 5, 7")
{
    for (std::uint32_t m : {3u, 5u, 7u})
        for (const auto& g : ab_catalog(m)) {
            INFO(g.describe() << " m=" << m);
            auto rep = is_almost_bent(g);
            CHECK(rep.classification == Classification::AlmostBent);
            const std::int64_t amp = std::int64_t{1} << ((m + 1) / 2);
            std::uint64_t total = 0;
            for (auto [v, c] : rep.values) {
                CHECK((v == 0 || v == amp || v == -amp));
                total += c;
            }
            CHECK(total == (std::uint64_t{1} << m) * ((std::uint64_t{1} << m) - 1));
        }
}

TEST_CASE("non almost bent functions")
{
    auto f = make_field(2, 3);
    CHECK(is_almost_bent(power(f, 1)).classification == Classification::NotAlmostBent);
    CHECK(is_almost_bent(power(make_field(2, 5), 5)).classification == Classification::AlmostBent);
    CHECK(is_almost_bent(power(make_field(2, 5), 11)).classification == Classification::AlmostBent);
    CHECK(is_almost_bent(power(make_field(2, 5), 7)).classification == Classification::AlmostBent);
    CHECK(is_almost_bent(power(make_field(2, 5), 15)).classification == Classification::NotAlmostBent);
    CHECK(is_almost_bent(power(make_field(2, 4), 3)).classification == Classification::NotAlmostBent);
    CHECK_ERROR(is_almost_bent(gold(11)), ErrorCode::FieldTooLarge);
}

TEST_CASE("trace variant as printed is not almost bent")
{
    // x^(2^i+1) + (x^(2^i+1) + x) Tr(x^(2^i+1) + x), evaluated directly
    auto f = make_field(2, 5);
    std::vector<Elem> table(32);
    for (Elem x = 0; x < 32; ++x) {
        Elem y = f.pow(x, std::uint64_t{3});
        table[x] = f.trace(f.add(y, x)) ? f.add(y, f.add(y, x)) : y;
    }
    bool ab = true;
    for (Elem a = 1; a < 32; ++a) {
        std::vector<std::uint8_t> fb(32);
        for (Elem x = 0; x < 32; ++x)
            fb[x] = static_cast<std::uint8_t>(f.trace(f.mul(a, table[x])));
        ab = ab && is_semi_bent(f, fb).holds();
    }
    CHECK_FALSE(ab);
}

TEST_CASE("planar catalog")
{
    for (auto [p, m] : {std::pair{3u, 1u}, {3u, 3u}, {3u, 5u}, {5u, 1u}, {5u, 3u}, {7u, 1u}}) {
        auto f = make_field(p, m);
        for (std::uint32_t t = 0; t < 2 * m; ++t) {
            if ((m / std::gcd(m, t)) % 2 == 0)
                continue;
            INFO("p=" << p << " m=" << m << " t=" << t);
            CHECK(is_planar(NonlinearFunction(FunctionKind::PlanarDembowskiOstrom, f, FunctionParams{.t = t})).holds());
        }
        if (p == 3) {
            for (std::uint32_t k = 1; k <= 7; k += 2)
                if (std::gcd(m, k) == 1) {
                    INFO("k=" << k << " m=" << m);
                    CHECK(is_planar(NonlinearFunction(FunctionKind::PlanarCoulterMatthews, f, FunctionParams{.k = k}))
                              .holds());
                }
            if (m % 2 == 1)
                for (Elem u : {1u, 2u, 3u, 5u})
                    if (u < f.order())
                        CHECK(is_planar(NonlinearFunction(FunctionKind::PlanarDingYuan, f, FunctionParams{.u = u}))
                                  .holds());
        }
    }
}

TEST_CASE("non planar functions")
{
    auto f9 = make_field(3, 2);
    auto rep = is_planar(power(f9, 3));
    CHECK(rep.classification == Classification::NotPlanar);
    CHECK(rep.values.at(1) == 8);
    // x^14 over GF(27): the k = 3 exponent where gcd(m, k) = 3
    CHECK_FALSE(is_planar(power(make_field(3, 3), 14)).holds());
    CHECK_ERROR(is_planar(gold(3)), ErrorCode::EvenCharacteristic);
    CHECK_ERROR(is_planar(power(make_field(3, 8), 2)), ErrorCode::FieldTooLarge);
}

TEST_CASE("Walsh values")
{
    auto f = make_field(2, 3);
    std::vector<std::uint8_t> zero(8, 0), tr(8), tr3(8);
    for (Elem x = 0; x < 8; ++x) {
        tr[x] = static_cast<std::uint8_t>(f.trace(x));
        tr3[x] = static_cast<std::uint8_t>(f.trace(f.pow(x, std::uint64_t{3})));
    }
    CHECK(walsh_value(f, zero, f.element(0)) == 8);
    CHECK(walsh_value(f, tr, f.element(1)) == 8);
    auto v = walsh_value(f, tr3, f.element(0));
    CHECK((v == 0 || v == 4 || v == -4));
    auto spec = walsh_spectrum(f, tr3);
    for (Elem w = 0; w < 8; ++w)
        CHECK(spec[w] == walsh_value(f, tr3, f.element(w)));
    CHECK_ERROR(walsh_value(f, std::vector<std::uint8_t>(4, 0), f.element(0)), ErrorCode::InvalidParameter);
}

TEST_CASE("semi-bent components and Parseval")
{
    for (std::uint32_t m : {3u, 5u})
        for (const auto& g : ab_catalog(m)) {
            const auto& f = g.field();
            for (Elem a = 1; a < f.order(); ++a) {
                auto fb = component_table(g, a);
                CHECK(is_semi_bent(f, fb).holds());
                std::int64_t s = 0;
                for (auto v : walsh_spectrum(f, fb))
                    s += v * v;
                CHECK(s == std::int64_t{1} << (2 * m));
            }
        }
    auto f = make_field(2, 5);
    std::vector<std::uint8_t> zero(32, 0), tr(32);
    for (Elem x = 0; x < 32; ++x)
        tr[x] = static_cast<std::uint8_t>(f.trace(x));
    CHECK_FALSE(is_semi_bent(f, zero).holds());
    CHECK_FALSE(is_semi_bent(f, tr).holds());
    CHECK_ERROR(is_semi_bent(make_field(2, 4), std::vector<std::uint8_t>(16, 0)), ErrorCode::EvenDegree);
    CHECK_ERROR(is_semi_bent(make_field(3, 3), std::vector<std::uint8_t>(27, 0)), ErrorCode::OddCharacteristic);
}
