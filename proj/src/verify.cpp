#include "abcodes/verify.hpp"

#include "abcodes/designs.hpp"
#include "abcodes/error.hpp"
#include "abcodes/sharing.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace abcodes {

namespace {

constexpr std::uint64_t kBruteForceCap = std::uint64_t{1} << 14;
constexpr std::uint32_t kRandomSubgroups = 5;
constexpr std::uint32_t kMaxDesignDegree = 5;

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string params_text(std::uint32_t n, std::uint32_t k, std::optional<std::uint32_t> d)
{
    std::string s = "[" + std::to_string(n) + ", " + std::to_string(k);
    if (d)
        s += ", " + std::to_string(*d);
    return s + "]";
}

std::string subject(const NonlinearFunction& f, std::uint32_t r)
{
    return f.id() + " " + f.describe() + " p=" + std::to_string(f.field().p()) + " m="
        + std::to_string(f.field().m()) + " r=" + std::to_string(r);
}

std::string low_text(const BigInt& a3, const BigInt& a4, const std::optional<BigInt>& a5)
{
    std::string s = "A3=" + to_decimal(a3) + " A4=" + to_decimal(a4);
    if (a5)
        s += " A5=" + to_decimal(*a5);
    return s;
}

struct Recorder {
    VerifyReport& report;

    void add(std::string claim, std::string subj, std::string expected, std::string computed)
    {
        const bool pass = expected == computed;
        add(std::move(claim), std::move(subj), std::move(expected), std::move(computed), pass);
    }

    void add(std::string claim, std::string subj, std::string expected, std::string computed, bool pass)
    {
        report.checks.push_back({std::move(claim), std::move(subj), std::move(expected), std::move(computed), pass});
    }

    template <class Body>
    void guarded(const std::string& claim, const std::string& subj, Body&& body)
    {
        try {
            body();
        } catch (const Error& e) {
            add(claim, subj, "completed", std::string(e.name()) + ": " + e.what(), false);
        }
    }
};

bool valid_degree(std::uint32_t p, std::uint32_t m) { return is_prime(p) && m >= 3 && m % 2 == 1; }

std::optional<bool> brute_minimal(const LinearCode& code)
{
    if (!power_fits(code.p(), code.dimension(), kBruteForceCap))
        return std::nullopt;
    return is_minimal_bruteforce(code).minimal;
}

void check_access(Recorder& rec, const std::string& subj, const LinearCode& code)
{
    const std::uint32_t q = code.p();
    const LinearCode base = dual_code(code);
    const auto s = access_structure(base, true);
    const std::uint32_t nk = s.n - s.k;

    rec.add("access-structure-democratic", subj, "democratic, d >= 3",
        std::string(s.democratic ? "democratic" : "not democratic") + ", d = " + std::to_string(s.d),
        s.democratic && s.d >= 3);

    const BigInt total = ipow(q, nk - 1);
    rec.add("access-structure-count", subj, to_decimal(total), to_decimal(s.minimal_access_sets));

    std::map<std::uint32_t, BigInt> expected;
    for (const auto& [t, c] : s.coverage)
        expected[t] = ipow(q - 1, t) * ipow(q, nk - (t + 1));
    if (s.democratic) {
        std::string e, c;
        for (const auto& [t, v] : expected)
            e += (e.empty() ? "" : " ") + std::to_string(t) + ":" + to_decimal(v);
        for (const auto& [t, v] : s.coverage)
            c += (c.empty() ? "" : " ") + std::to_string(t) + ":" + to_decimal(v);
        rec.add("access-structure-coverage", subj, e, c);
    }

    if (!power_fits(q, nk, kBruteForceCap))
        return;
    const auto e = enumerate_access_sets(base);
    bool membership = true;
    for (std::uint32_t i = 1; i < s.n; ++i) {
        BigInt want;
        if (s.democratic)
            want = s.coverage.at(1);
        else if (std::find(s.dictators.begin(), s.dictators.end(), i) != s.dictators.end())
            want = s.minimal_access_sets;
        else
            want = s.non_dictator_sets;
        membership = membership && BigInt(e.membership[i]) == want;
    }
    rec.add("access-structure-enumeration", subj,
        to_decimal(s.minimal_access_sets) + " sets, membership as summarized",
        to_decimal(e.minimal_access_sets) + " sets, membership " + (membership ? "as summarized" : "differs"));
}

void check_design(Recorder& rec, const std::string& subj, std::uint32_t m, std::uint32_t r, const CodeChain& chain,
    const WeightDistribution& ddwd)
{
    const std::uint32_t t = r == m ? 3 : 1;
    const auto ext_wd = macwilliams_transform(ddwd);
    const auto am = assmus_mattson(ext_wd, ddwd, t);
    rec.add("assmus-mattson", subj, "applicable t=" + std::to_string(t),
        std::string(am.applicable ? "applicable" : "not applicable") + " t=" + std::to_string(t));

    const auto theory = theoretical_wd_ext_ab(m, r);
    for (const std::uint32_t w : theory.nonzero_weights()) {
        if (w == theory.n || w < t)
            continue;
        const std::string s = subj + " w=" + std::to_string(w);
        rec.guarded("ab-design", s, [&] {
            const DesignParams dp = design_params_ab(m, r, w);
            const auto check = verify_design(extract_blocks(chain.dual_of_extended_dual, w), t);
            const std::string expected = std::to_string(dp.t) + "-(" + std::to_string(dp.n) + ", "
                + std::to_string(dp.k) + ", " + to_decimal(dp.lambda) + ")";
            const std::string computed = check.is_design
                ? std::to_string(t) + "-(" + std::to_string(dp.n) + ", " + std::to_string(w) + ", "
                    + to_decimal(check.lambda) + ")"
                : "not a " + std::to_string(t) + "-design";
            rec.add("ab-design", s, expected, computed);
        });
    }
}

void check_ab(Recorder& rec, const NonlinearFunction& f, std::uint32_t r)
{
    const std::uint32_t m = f.field().m();
    const std::uint32_t n = (1u << m) - 1;
    const std::string subj = subject(f, r);
    rec.guarded("ab-code", subj, [&] {
        const LinearCode code = build_code(f, canonical_subgroup(f.field(), r));
        const auto wd = weight_distribution(code);
        const std::uint32_t w1 = (1u << (m - 1)) - (1u << ((m - 1) / 2));
        std::optional<std::uint32_t> d, got;
        if (r >= 1) {
            d = w1;
            got = min_distance(wd);
        }
        rec.add("ab-code-parameters", subj, params_text(n, m + r, d),
            params_text(code.length(), code.dimension(), got));
        rec.add("ab-weight-distribution", subj, render_counts(theoretical_wd_ab(m, r)), render_counts(wd));
        const auto [b1, b2] = dual_low_weights_from_columns(code);
        rec.add("power-moments", subj, "true", bool_text(pless_check(wd, n, code.dimension(), 2, b1, b2)));

        const auto dual_wd = macwilliams_transform(wd);
        rec.add("ab-dual-distance", subj, std::to_string(r == m ? 5 : 3), std::to_string(min_distance(dual_wd)));
        const auto low = dual_low_weights_ab(m, r);
        rec.add("ab-dual-low-weights", subj, low_text(low.a3, low.a4, low.a5),
            low_text(dual_wd.count(3) * low.scale, dual_wd.count(4) * low.scale,
                low.a5 ? std::optional<BigInt>(dual_wd.count(5) * low.scale) : std::nullopt));

        const bool ratio = minimality_ratio(wd, 2);
        const auto brute = brute_minimal(code);
        if (m > 3) {
            rec.add("ab-minimality", subj, "true", bool_text(ratio));
            if (brute)
                rec.add("ab-minimality-bruteforce", subj, "true", bool_text(*brute));
            if (r >= 1 && (ratio || brute.value_or(false)))
                check_access(rec, subj, code);
        }

        if (r == 0)
            return;
        const CodeChain chain = derive_chain(code);
        const auto ddwd = weight_distribution(chain.dual_of_extended_dual);
        rec.add("ab-extended-parameters", subj, params_text(n + 1, m + r + 1, w1),
            params_text(chain.dual_of_extended_dual.length(), chain.dual_of_extended_dual.dimension(),
                min_distance(ddwd)));
        rec.add("ab-extended-distribution", subj, render_counts(theoretical_wd_ext_ab(m, r)), render_counts(ddwd));
        rec.add("ab-extended-dual-distance", subj, std::to_string(r == m ? 6 : 4),
            std::to_string(min_distance(macwilliams_transform(ddwd))));
        if (m <= kMaxDesignDegree)
            check_design(rec, subj, m, r, chain, ddwd);
    });
}

void check_planar(Recorder& rec, const NonlinearFunction& f, std::uint32_t r)
{
    const std::uint32_t p = f.field().p();
    const std::uint32_t m = f.field().m();
    const std::uint32_t pm = static_cast<std::uint32_t>(ipow(p, m));
    const std::uint32_t n = pm - 1;
    const std::string subj = subject(f, r);
    rec.guarded("planar-code", subj, [&] {
        const LinearCode code = build_code(f, canonical_subgroup(f.field(), r));
        const auto wd = weight_distribution(code);
        const std::uint32_t w1 = (p - 1) * (pm / p) - static_cast<std::uint32_t>(ipow(p, (m - 1) / 2));
        std::optional<std::uint32_t> d, got;
        if (r >= 1) {
            d = w1;
            got = min_distance(wd);
        }
        rec.add("planar-code-parameters", subj, params_text(n, m + r, d),
            params_text(code.length(), code.dimension(), got));
        const auto theory = f.kind() == FunctionKind::PlanarDembowskiOstrom ? theoretical_wd_planar_f1(p, m, r)
                                                                             : theoretical_wd_planar_p3(m, r);
        rec.add("planar-weight-distribution", subj, render_counts(theory), render_counts(wd));
        const auto [b1, b2] = dual_low_weights_from_columns(code);
        rec.add("power-moments", subj, "true", bool_text(pless_check(wd, n, code.dimension(), p, b1, b2)));

        const bool ratio = minimality_ratio(wd, p);
        const auto brute = brute_minimal(code);
        rec.add("planar-minimality", subj, "true", bool_text(ratio));
        if (brute)
            rec.add("planar-minimality-bruteforce", subj, "true", bool_text(*brute));

        if (r == 0)
            return;
        const auto dual_wd = macwilliams_transform(wd);
        const std::uint32_t dd = min_distance(dual_wd);
        if (p == 3) {
            rec.add("planar-dual-distance", subj, std::to_string(r == m ? 4 : 3), std::to_string(dd));
            const auto low = dual_low_weights_p3(m, r, P3Variant::Code);
            rec.add("planar-dual-low-weights", subj, low_text(low.a3, low.a4, std::nullopt),
                low_text(dual_wd.count(3) * low.scale, dual_wd.count(4) * low.scale, std::nullopt));
        } else {
            rec.add("planar-dual-distance", subj, ">= 3", std::to_string(dd), dd >= 3);
        }
        if (ratio || brute.value_or(false))
            check_access(rec, subj, code);

        if (p != 3)
            return;
        const CodeChain chain = derive_chain(code);
        const auto ddwd = weight_distribution(chain.dual_of_extended_dual);
        rec.add("planar-extended-parameters", subj, params_text(pm, m + r + 1, w1),
            params_text(chain.dual_of_extended_dual.length(), chain.dual_of_extended_dual.dimension(),
                min_distance(ddwd)));
        rec.add("planar-extended-distribution", subj, render_counts(theoretical_wd_ext_p3(m, r)),
            render_counts(ddwd));
        const auto ext_wd = macwilliams_transform(ddwd);
        const auto low = dual_low_weights_p3(m, r, P3Variant::Extended);
        rec.add("planar-extended-low-weights", subj, low_text(low.a3, low.a4, low.a5),
            low_text(ext_wd.count(3) * low.scale, ext_wd.count(4) * low.scale, ext_wd.count(5) * low.scale));
        rec.add("planar-extended-dual-distance", subj, std::to_string(r == m ? 5 : 3),
            std::to_string(min_distance(ext_wd)));
    });
}

void check_function_property(Recorder& rec, const NonlinearFunction& f)
{
    const std::string subj = f.id() + " " + f.describe() + " p=" + std::to_string(f.field().p())
        + " m=" + std::to_string(f.field().m());
    if (is_almost_bent_kind(f.kind())) {
        rec.guarded("almost-bent", subj, [&] {
            const auto rep = is_almost_bent(f);
            rec.add("almost-bent", subj, std::string(classification_name(Classification::AlmostBent)),
                std::string(classification_name(rep.classification)));
        });
    } else {
        rec.guarded("planar", subj, [&] {
            const auto rep = is_planar(f);
            rec.add("planar", subj, std::string(classification_name(Classification::Planar)),
                std::string(classification_name(rep.classification)));
        });
    }
}

void check_subgroup_invariance(Recorder& rec, const NonlinearFunction& f, std::uint32_t r)
{
    const std::string subj = subject(f, r);
    rec.guarded("subgroup-invariance", subj, [&] {
        const auto reference = weight_distribution(build_code(f, canonical_subgroup(f.field(), r)));
        std::mt19937_64 rng(0x5eed0000u + 1000u * f.field().p() + 10u * f.field().m() + r);
        std::uint32_t equal = 0;
        for (std::uint32_t i = 0; i < kRandomSubgroups; ++i)
            equal += weight_distribution(build_code(f, random_subgroup(f.field(), r, rng))) == reference;
        const std::string total = std::to_string(kRandomSubgroups);
        rec.add("subgroup-invariance", subj, total + "/" + total + " equal", std::to_string(equal) + "/" + total + " equal");
    });
}

NonlinearFunction fixture_function(std::uint32_t p, std::uint32_t m)
{
    const Field field = make_field(p, m);
    if (p == 2)
        return NonlinearFunction(FunctionKind::AbGold, field, FunctionParams{.i = 1});
    return NonlinearFunction(FunctionKind::PlanarDembowskiOstrom, field, FunctionParams{.t = 0});
}

void check_fixture(Recorder& rec, const Fixture& fx)
{
    std::string subj = "p=" + std::to_string(fx.p) + " m=" + std::to_string(fx.m) + " r=" + std::to_string(fx.r)
        + " " + fx.role;
    if (!fx.label.empty())
        subj += " (" + fx.label + ")";
    rec.guarded("example-fixture", subj, [&] {
        const auto f = fixture_function(fx.p, fx.m);
        const CodeChain chain = derive_chain(build_code(f, canonical_subgroup(f.field(), fx.r)));
        const auto got = chain_member_parameters(chain, fx.role);
        const bool pass = got.n == fx.n && got.k == fx.k && (!got.d || *got.d == fx.d);
        std::string computed = params_text(got.n, got.k, got.d);
        if (!got.d)
            computed.insert(computed.size() - 1, ", not enumerable");
        rec.add("example-fixture", subj, params_text(fx.n, fx.k, fx.d), computed, pass);
    });
}

void self_test(Recorder& rec, const VerifyRanges& ranges)
{
    std::vector<std::uint32_t> degrees;
    for (const auto& [p, ms] : ranges)
        if (p == 2)
            for (const std::uint32_t m : ms)
                if (valid_degree(2, m))
                    degrees.push_back(m);
    if (degrees.empty())
        degrees.push_back(3);
    bool corrupted = false;
    for (const std::uint32_t m : degrees) {
        for (const auto& f : catalog_functions(make_field(2, m))) {
            for (std::uint32_t r = 0; r <= m; ++r) {
                const std::string subj = subject(f, r);
                rec.guarded("ab-weight-distribution", subj, [&] {
                    auto theory = theoretical_wd_ab(m, r);
                    if (!corrupted) {
                        theory.counts[*theory.min_weight()] += 1;
                        corrupted = true;
                    }
                    const auto wd = weight_distribution(build_code(f, canonical_subgroup(f.field(), r)));
                    rec.add("ab-weight-distribution", subj, render_counts(theory), render_counts(wd));
                });
            }
        }
    }
}

std::uint32_t parse_uint(std::string_view s, std::string_view what)
{
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size() && !s.empty(), ErrorCode::ParseError,
        "bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

} // namespace

std::vector<NonlinearFunction> catalog_functions(const Field& field)
{
    std::vector<NonlinearFunction> out;
    const std::uint32_t p = field.p();
    const std::uint32_t m = field.m();
    if (m < 3 || m % 2 == 0)
        return out;
    if (p == 2) {
        for (std::uint32_t i = 1; i < m; ++i)
            if (std::gcd(i, m) == 1)
                out.emplace_back(FunctionKind::AbGold, field, FunctionParams{.i = i});
        for (std::uint32_t i = 1; i < m; ++i)
            if (std::gcd(i, m) == 1)
                out.emplace_back(FunctionKind::AbKasami, field, FunctionParams{.i = i});
        out.emplace_back(FunctionKind::AbWelch, field);
        out.emplace_back(m % 4 == 1 ? FunctionKind::AbNiho1 : FunctionKind::AbNiho2, field);
        if (m > 3)
            for (std::uint32_t i = 1; i < m; ++i)
                if (std::gcd(i, m) == 1)
                    out.emplace_back(FunctionKind::AbTraceVariant, field, FunctionParams{.i = i});
        return out;
    }
    for (const std::uint32_t t : {0u, 1u})
        if ((m / std::gcd(m, t)) % 2 == 1)
            out.emplace_back(FunctionKind::PlanarDembowskiOstrom, field, FunctionParams{.t = t});
    if (p == 3) {
        for (const std::uint32_t k : {1u, 3u})
            if (std::gcd(m, k) == 1)
                out.emplace_back(FunctionKind::PlanarCoulterMatthews, field, FunctionParams{.k = k});
        for (const Elem u : {Elem{1}, Elem{2}, Elem{3}})
            out.emplace_back(FunctionKind::PlanarDingYuan, field, FunctionParams{.u = u});
    }
    return out;
}

VerifyRanges parse_ranges(std::string_view text)
{
    VerifyRanges out;
    if (text.empty())
        return out;
    for (const auto group : split(text, ';')) {
        const auto colon = group.find(':');
        require(colon != std::string_view::npos, ErrorCode::ParseError,
            "range '" + std::string(group) + "' must look like p:m,m");
        const std::uint32_t p = parse_uint(group.substr(0, colon), "characteristic");
        std::vector<std::uint32_t> ms;
        for (const auto m : split(group.substr(colon + 1), ','))
            ms.push_back(parse_uint(m, "degree"));
        out.emplace_back(p, std::move(ms));
    }
    return out;
}

VerifyRanges default_ranges() { return {{2, {3, 5}}, {3, {3, 5}}, {5, {3}}}; }

std::vector<Fixture> parse_fixtures(const nlohmann::json& j)
{
    std::vector<Fixture> out;
    try {
        for (const auto& e : j.at("fixtures")) {
            Fixture f;
            f.p = e.at("p").get<std::uint32_t>();
            f.m = e.at("m").get<std::uint32_t>();
            f.r = e.at("r").get<std::uint32_t>();
            f.role = e.at("role").get<std::string>();
            f.n = e.at("n").get<std::uint32_t>();
            f.k = e.at("k").get<std::uint32_t>();
            f.d = e.at("d").get<std::uint32_t>();
            f.label = e.value("label", std::string());
            out.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("fixture file: ") + e.what());
    }
    return out;
}

CodeParameters chain_member_parameters(const CodeChain& chain, std::string_view role)
{
    const LinearCode* code = nullptr;
    if (role == "code")
        code = &chain.code;
    else if (role == "dual")
        code = &chain.dual;
    else if (role == "extended_dual")
        code = &chain.extended_dual;
    else if (role == "dual_of_extended_dual")
        code = &chain.dual_of_extended_dual;
    else
        fail(ErrorCode::InvalidParameter, "unknown chain role '" + std::string(role) + "'");
    CodeParameters out{code->length(), code->dimension(), std::nullopt};
    const std::uint32_t smaller = std::min(out.k, out.n - out.k);
    if (out.k > 0 && power_fits(code->p(), smaller, kEnumerationCap))
        out.d = min_distance(weight_distribution(*code));
    return out;
}

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

VerifyReport verify_all(const VerifyOptions& options)
{
    VerifyReport report;
    Recorder rec{report};
    if (options.self_test) {
        self_test(rec, options.ranges);
        return report;
    }
    for (const auto& [p, ms] : options.ranges) {
        for (const std::uint32_t m : ms) {
            const std::string subj = "p=" + std::to_string(p) + " m=" + std::to_string(m);
            if (!valid_degree(p, m)) {
                rec.add("parameters", subj, "prime p, odd m >= 3", "rejected", false);
                continue;
            }
            const auto functions = catalog_functions(make_field(p, m));
            for (const auto& f : functions) {
                check_function_property(rec, f);
                for (std::uint32_t r = 0; r <= m; ++r) {
                    if (p == 2)
                        check_ab(rec, f, r);
                    else
                        check_planar(rec, f, r);
                }
            }
            if (p == 3) {
                for (std::uint32_t r = 0; r <= m; ++r) {
                    rec.guarded("planar-table-identity", subj + " r=" + std::to_string(r), [&] {
                        rec.add("planar-table-identity", subj + " r=" + std::to_string(r),
                            render_counts(theoretical_wd_planar_f1(3, m, r)),
                            render_counts(theoretical_wd_planar_p3(m, r)));
                    });
                }
            }
            if (!functions.empty())
                for (std::uint32_t r = 1; r < m; ++r)
                    check_subgroup_invariance(rec, functions.front(), r);
            for (const auto& fx : options.fixtures)
                if (fx.p == p && fx.m == m)
                    check_fixture(rec, fx);
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const VerifyReport& report)
{
    nlohmann::ordered_json j;
    j["checks"] = report.checks.size();
    j["failures"] = report.failures();
    j["passed"] = report.passed();
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json e;
        e["claim"] = c.claim;
        e["subject"] = c.subject;
        e["expected"] = c.expected;
        e["computed"] = c.computed;
        e["pass"] = c.pass;
        j["results"].push_back(std::move(e));
    }
    return j;
}

std::string render_counts(const WeightDistribution& wd)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [w, c] : wd.counts) {
        if (!first)
            s += ", ";
        first = false;
        s += std::to_string(w) + ":" + to_decimal(c);
    }
    return s + "}";
}

} // namespace abcodes
