#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "verify.hpp"
#include "witness.hpp"

namespace charposet {

using Json = nlohmann::ordered_json;

Json to_json(const CycInt& value);
/// Class sizes, representative orders and the value matrix for one subgroup.
Json character_table_json(const CharacterRegistry& registry, int lattice_id);
/// Table of G, or of every subgroup when all_subgroups is set.
Json irr_json(const CharacterRegistry& registry, bool all_subgroups);

Json poset_json(const CharPoset& poset);
std::string poset_dot(const CharPoset& poset);
Json chain_json(const CharPoset& poset, const WitnessChain& chain, const std::string& route);

Json reports_json(const std::vector<TheoremReport>& reports, bool include_timings);
std::string reports_csv(const std::vector<TheoremReport>& reports);

const char* to_string(EdgeStrategy strategy) noexcept;

}  // namespace charposet
