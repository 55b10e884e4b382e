#include "abcodes/io.hpp"

#include "abcodes/error.hpp"

#include <algorithm>
#include <sstream>

namespace abcodes {

using nlohmann::ordered_json;

std::string format_generator_matrix(const LinearCode& code)
{
    std::ostringstream out;
    const Matrix& b = code.basis();
    out << code.p() << ' ' << code.length() << ' ' << code.dimension() << '\n';
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j)
            out << (j ? " " : "") << b(i, j);
        out << '\n';
    }
    return out.str();
}

LinearCode parse_generator_matrix(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long long p = 0, n = 0, k = 0;
    if (!(in >> p >> n >> k) || p < 2 || n < 0 || k < 0 || k > n)
        fail(ErrorCode::ParseError, "expected header \"p n k\"");
    Matrix g(0, static_cast<std::size_t>(n));
    std::vector<std::uint32_t> row(static_cast<std::size_t>(n));
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < n; ++j) {
            long long v = -1;
            if (!(in >> v))
                fail(ErrorCode::ParseError, "matrix ends early at row " + std::to_string(i));
            if (v < 0 || v >= p)
                fail(ErrorCode::ParseError, "entry " + std::to_string(v) + " outside [0, p)");
            row[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(v);
            if (j == n - 1)
                g.append_row(row);
        }
    std::string extra;
    if (in >> extra)
        fail(ErrorCode::ParseError, "trailing data after the matrix");
    if (!is_prime(static_cast<std::uint64_t>(p)))
        fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    LinearCode code(static_cast<std::uint32_t>(p), std::move(g));
    if (code.dimension() != k)
        fail(ErrorCode::ParseError, "rows are linearly dependent");
    return code;
}

ordered_json to_json(const WeightDistribution& wd)
{
    ordered_json j;
    j["n"] = wd.n;
    j["k"] = wd.k;
    j["p"] = wd.p;
    ordered_json counts = ordered_json::array();
    for (const auto& [w, c] : wd.counts)
        counts.push_back({{"w", w}, {"count", to_decimal(c)}});
    j["counts"] = std::move(counts);
    return j;
}

WeightDistribution weight_distribution_from_json(const ordered_json& j)
{
    try {
        WeightDistribution wd;
        wd.n = j.at("n").get<std::uint32_t>();
        wd.k = j.at("k").get<std::uint32_t>();
        wd.p = j.at("p").get<std::uint32_t>();
        for (const auto& e : j.at("counts")) {
            const auto w = e.at("w").get<std::uint32_t>();
            if (w > wd.n)
                fail(ErrorCode::ParseError, "weight exceeds length");
            wd.counts[w] = parse_decimal(e.at("count").get<std::string>());
        }
        return wd;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

ordered_json to_json(const BlockSet& bs)
{
    ordered_json j;
    j["n"] = bs.n;
    j["k"] = bs.k;
    j["blocks"] = bs.blocks;
    return j;
}

ordered_json to_json(const DesignParams& d)
{
    return ordered_json{{"t", d.t}, {"n", d.n}, {"k", d.k}, {"lambda", to_decimal(d.lambda)}};
}

ordered_json to_json(const AccessStructureSummary& s)
{
    ordered_json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["q"] = s.q;
    j["participants"] = s.participants;
    j["minimal_access_sets"] = to_decimal(s.minimal_access_sets);
    ordered_json cov = ordered_json::array();
    for (const auto& [t, c] : s.coverage)
        cov.push_back({{"t", t}, {"count", to_decimal(c)}});
    j["coverage"] = std::move(cov);
    j["d"] = s.d;
    j["democratic"] = s.democratic;
    j["dictator_rule"] = s.dictator_rule;
    if (s.dictator_rule) {
        j["dictators"] = s.dictators;
        j["non_dictator_sets"] = to_decimal(s.non_dictator_sets);
    }
    return j;
}

ordered_json to_json(const LinearCode& code)
{
    ordered_json j;
    j["p"] = code.p();
    j["n"] = code.length();
    j["k"] = code.dimension();
    const auto& prov = code.provenance();
    ordered_json pj;
    if (!prov.function_id.empty()) {
        pj["function_id"] = prov.function_id;
        pj["function"] = prov.function;
        pj["subgroup_basis"] = prov.subgroup_basis;
    }
    pj["chain"] = prov.chain_label();
    if (prov.expected_rank) {
        pj["expected_rank"] = *prov.expected_rank;
        pj["rank_as_expected"] = prov.rank_as_expected;
    }
    j["provenance"] = std::move(pj);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < code.basis().rows(); ++i) {
        auto r = code.basis().row(i);
        rows.push_back(std::vector<std::uint32_t>(r.begin(), r.end()));
    }
    j["generator"] = std::move(rows);
    return j;
}

std::string to_csv(const WeightDistribution& wd)
{
    std::string out = "w,count\n";
    for (const auto& [w, c] : wd.counts)
        out += std::to_string(w) + "," + to_decimal(c) + "\n";
    return out;
}

std::string to_text_table(const WeightDistribution& wd, std::string_view caption)
{
    std::size_t wcol = std::string("Weight w").size(), ccol = std::string("Multiplicity A_w").size();
    for (const auto& [w, c] : wd.counts) {
        wcol = std::max(wcol, std::to_string(w).size());
        ccol = std::max(ccol, to_decimal(c).size());
    }
    auto pad = [](std::string s, std::size_t width) {
        s.resize(std::max(width, s.size()), ' ');
        return s;
    };
    const std::string rule = "+" + std::string(wcol + 2, '-') + "+" + std::string(ccol + 2, '-') + "+\n";
    std::string out;
    if (!caption.empty())
        out += std::string(caption) + "\n";
    out += rule;
    out += "| " + pad("Weight w", wcol) + " | " + pad("Multiplicity A_w", ccol) + " |\n";
    out += rule;
    for (const auto& [w, c] : wd.counts)
        out += "| " + pad(std::to_string(w), wcol) + " | " + pad(to_decimal(c), ccol) + " |\n";
    out += rule;
    return out;
}

} // namespace abcodes
