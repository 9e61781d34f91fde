#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qwit/witness.hpp"

namespace qwit {

// Witness documents have the shape
//   {"n": 4, "k": 2, "edges": [[0,1],[1,2]],
//    "terms": [{"alpha": 1, "letters": ["X","X"]}, {"alpha": 1, "letters": ["Z","Z"]}]}
// Missing "terms" is a SchemaError; "alpha" defaults to 1.

WitnessSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const WitnessSpec& spec);
WitnessSpec load_spec(const std::filesystem::path& path);

nlohmann::json observable_to_json(const Observable& obs);

/// FNV-1a over the canonical JSON dump, as 16 hex digits.
std::string spec_hash(const WitnessSpec& spec);

}  // namespace qwit
