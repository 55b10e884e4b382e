#include "abcodes/codes.hpp"
#include "abcodes/designs.hpp"
#include "abcodes/error.hpp"
#include "abcodes/io.hpp"
#include "abcodes/sharing.hpp"
#include "abcodes/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace abcodes;
using nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, VerificationFailed = 1, UsageError = 2, ResourceCap = 3 };

struct Config {
    std::uint32_t p = 2;
    std::uint32_t m = 0;
    std::optional<std::uint32_t> r;
    std::string func;
    std::optional<std::uint32_t> i, t, k, u;
    std::optional<std::string> e;
    std::string subgroup = "canonical";
    std::string format = "json";
    std::string output;
    // design
    std::uint32_t weight = 0;
    // sharing
    bool bruteforce = false;
    bool enumerate = false;
    // verify-all
    std::string ranges;
    bool ranges_given = false;
    std::optional<std::string> fixtures;
    bool self_test = false;
};

void emit(const Config& cfg, const std::string& text)
{
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    require(static_cast<bool>(out), ErrorCode::InvalidParameter, "cannot open output file " + cfg.output);
    out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

NonlinearFunction make_function(const Config& cfg)
{
    const auto kind = parse_function_id(cfg.func);
    require(kind.has_value(), ErrorCode::InvalidParameter, "unknown function id '" + cfg.func + "'");
    FunctionParams params;
    params.i = cfg.i;
    params.t = cfg.t;
    params.k = cfg.k;
    if (cfg.u)
        params.u = Elem{*cfg.u};
    if (cfg.e)
        params.exponent = parse_decimal(*cfg.e);
    return NonlinearFunction(*kind, make_field(cfg.p, cfg.m), params);
}

AdditiveSubgroup make_subgroup(const Config& cfg, const Field& field)
{
    if (cfg.subgroup == "canonical") {
        require(cfg.r.has_value(), ErrorCode::InvalidParameter, "--r is required with the canonical subgroup");
        return canonical_subgroup(field, *cfg.r);
    }
    std::vector<Elem> basis;
    std::stringstream in(cfg.subgroup);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            require(used == item.size(), ErrorCode::ParseError, "bad subgroup element '" + item + "'");
            basis.push_back(static_cast<Elem>(v));
        } catch (const std::logic_error&) {
            fail(ErrorCode::ParseError, "bad subgroup element '" + item + "'");
        }
    }
    const auto sub = subgroup_from_basis(field, basis);
    require(!cfg.r || *cfg.r == sub.rank(), ErrorCode::RankOutOfRange,
        "--r does not match the size of the explicit basis");
    return sub;
}

std::optional<WeightDistribution> closed_form(const NonlinearFunction& f, std::uint32_t r)
{
    const std::uint32_t p = f.field().p(), m = f.field().m();
    if (is_almost_bent_kind(f.kind()))
        return theoretical_wd_ab(m, r);
    if (f.kind() == FunctionKind::PlanarDembowskiOstrom)
        return theoretical_wd_planar_f1(p, m, r);
    if (is_planar_kind(f.kind()))
        return theoretical_wd_planar_p3(m, r);
    return std::nullopt;
}

std::string diff_text(const WeightDistribution& got, const WeightDistribution& want)
{
    std::set<std::uint32_t> weights;
    for (const auto& [w, c] : got.counts)
        weights.insert(w);
    for (const auto& [w, c] : want.counts)
        weights.insert(w);
    std::string out;
    for (const std::uint32_t w : weights)
        if (got.count(w) != want.count(w))
            out += "  w=" + std::to_string(w) + ": enumerated " + to_decimal(got.count(w)) + ", closed form "
                + to_decimal(want.count(w)) + "\n";
    return out;
}

int cmd_construct(const Config& cfg)
{
    const auto f = make_function(cfg);
    const auto sub = make_subgroup(cfg, f.field());
    const LinearCode code = build_code(f, sub);
    const auto wd = weight_distribution(code);
    const auto theory = closed_form(f, sub.rank());
    const bool match = !theory || *theory == wd;
    const std::string verdict = theory ? (match ? "match" : "mismatch") : "no closed form";

    if (cfg.format == "csv") {
        emit(cfg, to_csv(wd));
    } else if (cfg.format == "text") {
        std::string s = f.id() + " " + f.describe() + " over GF(" + std::to_string(cfg.p) + "^" + std::to_string(cfg.m)
            + "), r = " + std::to_string(sub.rank()) + "\n";
        s += "parameters [" + std::to_string(code.length()) + ", " + std::to_string(code.dimension()) + ", "
            + std::to_string(min_distance(wd)) + "]\n\n";
        s += format_generator_matrix(code) + "\n";
        s += to_text_table(wd, "Enumerated weight distribution") + "\n";
        if (theory)
            s += to_text_table(*theory, "Closed-form weight distribution") + "\n";
        s += "verdict: " + verdict + "\n";
        if (theory && !match)
            s += diff_text(wd, *theory);
        emit(cfg, s);
    } else {
        ordered_json j;
        j["code"] = to_json(code);
        j["d"] = min_distance(wd);
        j["enumerated"] = to_json(wd);
        j["theoretical"] = theory ? to_json(*theory) : ordered_json(nullptr);
        j["verdict"] = verdict;
        emit(cfg, dump(j));
    }
    if (theory && !match)
        std::cerr << "closed form mismatch:\n" << diff_text(wd, *theory);
    return match ? Ok : VerificationFailed;
}

struct Member {
    std::string role;
    const LinearCode* code;
    std::optional<WeightDistribution> wd;
    std::optional<std::uint32_t> claimed_d;
    std::optional<WeightDistribution> claimed_wd;
};

int cmd_analyze(const Config& cfg)
{
    const auto f = make_function(cfg);
    const auto sub = make_subgroup(cfg, f.field());
    const std::uint32_t p = cfg.p, m = cfg.m, r = sub.rank();
    const CodeChain chain = derive_chain(build_code(f, sub));
    const bool ab = is_almost_bent_kind(f.kind());
    const bool claims = r >= 1 && (ab || is_planar_kind(f.kind()));

    std::vector<Member> members = {{"code", &chain.code, {}, {}, {}}, {"dual", &chain.dual, {}, {}, {}},
        {"extended_dual", &chain.extended_dual, {}, {}, {}},
        {"dual_of_extended_dual", &chain.dual_of_extended_dual, {}, {}, {}}};
    for (auto& mb : members) {
        const std::uint32_t n = mb.code->length(), k = mb.code->dimension();
        if (k > 0 && power_fits(p, std::min(k, n - k), kEnumerationCap))
            mb.wd = weight_distribution(*mb.code);
    }
    if (claims) {
        members[0].claimed_wd = closed_form(f, r);
        if (ab) {
            members[1].claimed_d = r == m ? 5 : 3;
            members[2].claimed_d = r == m ? 6 : 4;
            members[3].claimed_wd = theoretical_wd_ext_ab(m, r);
        } else if (p == 3) {
            members[1].claimed_d = r == m ? 4 : 3;
            members[2].claimed_d = r == m ? 5 : 3;
            members[3].claimed_wd = theoretical_wd_ext_p3(m, r);
        }
    }

    bool all_match = true;
    ordered_json chain_json = ordered_json::array();
    std::string text;
    for (const auto& mb : members) {
        ordered_json j;
        j["role"] = mb.role;
        j["n"] = mb.code->length();
        j["k"] = mb.code->dimension();
        std::optional<std::uint32_t> d;
        if (mb.wd && mb.code->dimension() > 0)
            d = min_distance(*mb.wd);
        j["d"] = d ? ordered_json(*d) : ordered_json(nullptr);
        std::string line = mb.role + ": [" + std::to_string(mb.code->length()) + ", "
            + std::to_string(mb.code->dimension()) + ", " + (d ? std::to_string(*d) : "?") + "]";
        if (mb.claimed_d) {
            const bool ok = d && *d == *mb.claimed_d;
            all_match = all_match && ok;
            j["claimed_d"] = *mb.claimed_d;
            j["d_matches_claim"] = ok;
            line += " claimed d=" + std::to_string(*mb.claimed_d) + (ok ? " (match)" : " (MISMATCH)");
        }
        if (mb.claimed_wd) {
            const bool ok = mb.wd && *mb.wd == *mb.claimed_wd;
            all_match = all_match && ok;
            j["claimed_distribution"] = to_json(*mb.claimed_wd);
            j["distribution_matches_claim"] = ok;
            line += std::string(" distribution ") + (ok ? "matches closed form" : "DIFFERS from closed form");
        }
        j["distribution"] = mb.wd ? to_json(*mb.wd) : ordered_json(nullptr);
        text += line + "\n";
        if (mb.wd)
            text += "  " + render_counts(*mb.wd) + "\n";
        chain_json.push_back(std::move(j));
    }
    const std::string note = claims ? ""
        : r == 0 ? "r = 0: the extended-chain claims do not apply; chain computed structurally"
                 : "no closed-form claims for this function";
    if (cfg.format == "text") {
        if (!note.empty())
            text += "note: " + note + "\n";
        emit(cfg, text);
    } else if (cfg.format == "csv") {
        std::string s = "role,n,k,d\n";
        for (const auto& j : chain_json)
            s += j["role"].get<std::string>() + "," + std::to_string(j["n"].get<std::uint32_t>()) + ","
                + std::to_string(j["k"].get<std::uint32_t>()) + ","
                + (j["d"].is_null() ? "" : std::to_string(j["d"].get<std::uint32_t>())) + "\n";
        emit(cfg, s);
    } else {
        ordered_json j;
        j["function_id"] = f.id();
        j["function"] = f.describe();
        j["p"] = p;
        j["m"] = m;
        j["r"] = r;
        j["chain"] = std::move(chain_json);
        j["claims_match"] = all_match;
        if (!note.empty())
            j["note"] = note;
        emit(cfg, dump(j));
    }
    return all_match ? Ok : VerificationFailed;
}

int cmd_verify_function(const Config& cfg)
{
    const auto f = make_function(cfg);
    SpectrumReport rep = cfg.p == 2 ? is_almost_bent(f) : is_planar(f);
    if (cfg.format == "text" || cfg.format == "csv") {
        std::string s = cfg.format == "csv" ? "value,multiplicity\n" : f.id() + " " + f.describe() + ": "
                + std::string(classification_name(rep.classification)) + "\n";
        for (const auto& [v, c] : rep.values)
            s += (cfg.format == "csv" ? "" : "  ") + std::to_string(v) + (cfg.format == "csv" ? "," : " x ")
                + std::to_string(c) + "\n";
        emit(cfg, s);
    } else {
        ordered_json j;
        j["function_id"] = f.id();
        j["function"] = f.describe();
        j["classification"] = classification_name(rep.classification);
        ordered_json values = ordered_json::array();
        for (const auto& [v, c] : rep.values)
            values.push_back({{"value", v}, {"multiplicity", c}});
        j["values"] = std::move(values);
        emit(cfg, dump(j));
    }
    return rep.holds() ? Ok : VerificationFailed;
}

int cmd_design(const Config& cfg)
{
    require(cfg.p == 2, ErrorCode::EvenCharacteristic, "design parameters are defined for binary codes");
    const auto f = make_function(cfg);
    const auto sub = make_subgroup(cfg, f.field());
    const DesignParams dp = design_params_ab(cfg.m, sub.rank(), cfg.weight);
    const CodeChain chain = derive_chain(build_code(f, sub));
    const auto blocks = extract_blocks(chain.dual_of_extended_dual, cfg.weight);
    const auto check = verify_design(blocks, dp.t);
    const auto ddwd = weight_distribution(chain.dual_of_extended_dual);
    const auto am = assmus_mattson(macwilliams_transform(ddwd), ddwd, dp.t);
    const bool ok = check.is_design && check.lambda == dp.lambda;

    if (cfg.format == "text" || cfg.format == "csv") {
        std::string s = "predicted " + std::to_string(dp.t) + "-(" + std::to_string(dp.n) + ", " + std::to_string(dp.k)
            + ", " + to_decimal(dp.lambda) + ")" + (divisibility_holds(dp) ? "" : " (divisibility fails)") + "\n";
        s += "blocks " + std::to_string(blocks.blocks.size()) + "\n";
        s += check.is_design ? "verified lambda " + to_decimal(check.lambda) + "\n" : "not a design\n";
        s += std::string("Assmus-Mattson ") + (am.applicable ? "applicable" : "not applicable") + " (d="
            + std::to_string(am.d) + ", s=" + std::to_string(am.s) + ")\n";
        emit(cfg, s);
    } else {
        ordered_json j;
        j["predicted"] = to_json(dp);
        j["divisibility"] = divisibility_holds(dp);
        j["blocks"] = to_json(blocks);
        j["is_design"] = check.is_design;
        j["lambda"] = check.is_design ? ordered_json(to_decimal(check.lambda)) : ordered_json(nullptr);
        if (!check.is_design) {
            j["witness"] = {{"first", *check.witness_first}, {"first_count", check.count_first},
                {"second", *check.witness_second}, {"second_count", check.count_second}};
        }
        j["assmus_mattson"] = {{"d", am.d}, {"s", am.s}, {"t", am.t}, {"applicable", am.applicable}};
        j["matches_prediction"] = ok;
        emit(cfg, dump(j));
    }
    return ok ? Ok : VerificationFailed;
}

int cmd_sharing(const Config& cfg)
{
    const auto f = make_function(cfg);
    const auto sub = make_subgroup(cfg, f.field());
    const LinearCode code = build_code(f, sub);
    const auto wd = weight_distribution(code);
    bool minimal = minimality_ratio(wd, cfg.p);
    std::string evidence = minimal ? "weight ratio" : "none";
    if (!minimal && cfg.bruteforce) {
        minimal = is_minimal_bruteforce(code).minimal;
        evidence = minimal ? "exhaustive" : "none";
    }
    const LinearCode base = dual_code(code);
    const auto s = access_structure(base, minimal);
    ordered_json j = to_json(s);
    j["minimality_evidence"] = evidence;
    if (cfg.enumerate) {
        const auto e = enumerate_access_sets(base);
        ordered_json ej;
        ej["minimal_access_sets"] = to_decimal(e.minimal_access_sets);
        ej["membership"] = std::vector<std::uint64_t>(e.membership.begin() + 1, e.membership.end());
        j["enumeration"] = std::move(ej);
    }
    if (cfg.format == "json") {
        emit(cfg, dump(j));
    } else {
        std::string t = "minimal access sets " + to_decimal(s.minimal_access_sets) + "\n";
        for (const auto& [k, c] : s.coverage)
            t += "groups of " + std::to_string(k) + ": " + to_decimal(c) + "\n";
        t += "dual distance " + std::to_string(s.d) + (s.democratic ? ", democratic\n" : "\n");
        if (s.dictator_rule)
            t += "dictators " + std::to_string(s.dictators.size()) + ", others in " + to_decimal(s.non_dictator_sets)
                + " sets\n";
        emit(cfg, t);
    }
    return Ok;
}

int cmd_verify_all(const Config& cfg)
{
    VerifyOptions opt;
    opt.ranges = cfg.ranges_given ? parse_ranges(cfg.ranges) : default_ranges();
    opt.self_test = cfg.self_test;
    std::string path = cfg.fixtures.value_or(std::string(ABCODES_DATA_DIR) + "/example_fixtures.json");
    if (!path.empty() && (cfg.fixtures || std::filesystem::exists(path))) {
        std::ifstream in(path);
        require(static_cast<bool>(in), ErrorCode::ParseError, "cannot read fixture file " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::ParseError, std::string("fixture file: ") + e.what());
        }
        opt.fixtures = parse_fixtures(j);
    }
    const auto report = verify_all(opt);
    if (cfg.format == "json") {
        emit(cfg, dump(to_json(report)));
    } else if (cfg.format == "csv") {
        std::string s = "claim,subject,expected,computed,pass\n";
        auto quote = [](const std::string& v) {
            std::string q = "\"";
            for (char c : v)
                q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        };
        for (const auto& c : report.checks)
            s += c.claim + "," + quote(c.subject) + "," + quote(c.expected) + "," + quote(c.computed) + ","
                + (c.pass ? "true" : "false") + "\n";
        emit(cfg, s);
    } else {
        std::string s;
        for (const auto& c : report.checks) {
            s += std::string(c.pass ? "PASS " : "FAIL ") + c.claim + " | " + c.subject;
            if (!c.pass)
                s += " | expected " + c.expected + " | computed " + c.computed;
            s += "\n";
        }
        s += std::to_string(report.checks.size()) + " checks, " + std::to_string(report.failures()) + " failed\n";
        emit(cfg, s);
    }
    if (cfg.self_test)
        return report.failures() == 1 ? Ok : VerificationFailed;
    return report.passed() ? Ok : VerificationFailed;
}

void function_options(CLI::App* sub, Config& cfg, bool subgroup)
{
    sub->add_option("--p", cfg.p, "Characteristic")->required();
    sub->add_option("--m", cfg.m, "Extension degree")->required();
    sub->add_option("--func", cfg.func, "Function id (ab:gold, ab:kasami, ab:welch, ab:niho1, ab:niho2, "
                                        "ab:trace, planar:do, planar:cm, planar:dy, power)")
        ->required();
    sub->add_option("--i", cfg.i, "Exponent parameter i");
    sub->add_option("--t", cfg.t, "Exponent parameter t");
    sub->add_option("--k", cfg.k, "Exponent parameter k");
    sub->add_option("--u", cfg.u, "Coefficient u (field element encoding)");
    sub->add_option("--e", cfg.e, "Exponent for the power function");
    if (subgroup) {
        sub->add_option("--r", cfg.r, "Subgroup rank");
        sub->add_option("--subgroup", cfg.subgroup, "'canonical' or comma-separated basis encodings");
    }
}

} // namespace

int main(int argc, char** argv)
{
    Config cfg;
    CLI::App app{"Linear codes from almost bent and planar functions"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", cfg.output, "Output path (default stdout)");

    auto* construct = app.add_subcommand("construct", "Build a code and compare with its closed form");
    auto* analyze = app.add_subcommand("analyze", "Dual, extended and dual-of-extended chain");
    auto* verify_function = app.add_subcommand("verify-function", "Almost bent or planar property check");
    auto* design = app.add_subcommand("design", "Designs held by codewords of one weight");
    auto* sharing = app.add_subcommand("sharing", "Access structure of the secret sharing scheme");
    auto* verify = app.add_subcommand("verify-all", "Run the verification suite");
    for (auto* sub : {construct, analyze, verify_function, design, sharing, verify}) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output", cfg.output, "Output path (default stdout)");
    }
    function_options(construct, cfg, true);
    function_options(analyze, cfg, true);
    function_options(verify_function, cfg, false);
    function_options(design, cfg, true);
    design->add_option("--weight", cfg.weight, "Codeword weight giving the blocks")->required();
    function_options(sharing, cfg, true);
    sharing->add_flag("--bruteforce", cfg.bruteforce, "Prove minimality exhaustively when the ratio test fails");
    sharing->add_flag("--enumerate", cfg.enumerate, "Count access sets by enumerating minimal dual codewords");
    auto* ranges = verify->add_option("--ranges", cfg.ranges, "p:m,m;p:m (default 2:3,5;3:3,5;5:3); no value for none")
                       ->expected(0, 1);
    verify->add_option("--fixtures", cfg.fixtures, "Example fixture file (empty string disables)");
    verify->add_flag("--self-test", cfg.self_test, "Corrupt one multiplicity; succeed iff exactly one check fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : UsageError;
    }

    cfg.ranges_given = ranges->count() > 0;
    try {
        if (*construct)
            return cmd_construct(cfg);
        if (*analyze)
            return cmd_analyze(cfg);
        if (*verify_function)
            return cmd_verify_function(cfg);
        if (*design)
            return cmd_design(cfg);
        if (*sharing)
            return cmd_sharing(cfg);
        return cmd_verify_all(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_resource_error(e.code()) ? ResourceCap : UsageError;
    }
}
