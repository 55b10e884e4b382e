#pragma once

#include "abcodes/codes.hpp"
#include "abcodes/designs.hpp"
#include "abcodes/sharing.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace abcodes {

/// "p n k" then k rows of n space-separated digits (the RREF basis).
std::string format_generator_matrix(const LinearCode& code);
LinearCode parse_generator_matrix(std::string_view text);

nlohmann::ordered_json to_json(const WeightDistribution& wd);
WeightDistribution weight_distribution_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const BlockSet& bs);
nlohmann::ordered_json to_json(const DesignParams& d);
nlohmann::ordered_json to_json(const AccessStructureSummary& s);
nlohmann::ordered_json to_json(const LinearCode& code);

/// "w,count" header then one row per weight.
std::string to_csv(const WeightDistribution& wd);

/// Two-column weight / multiplicity table.
std::string to_text_table(const WeightDistribution& wd, std::string_view caption);

} // namespace abcodes
