#pragma once

#include <string>

#include "adic/tower.hpp"

namespace adic {

// System-spec JSON:
//   { "generator": "explicit" | "periodic" | "odometer" | "example-ab",
//     "levels": [ { "words": ["2211111", "22211"] }, ... ],
//     "period": k,          // periodic only: trailing cycle length
//     "depth": N }          // optional bound for generator-backed systems
// Words are strings of 1-based digits; alphabets past 9 use comma-separated
// tokens ("1,12,3").
TowerSystem load_system_json(const std::string& json_text);

// Accepts a generator name ("odometer", "example-ab") or a path to a JSON
// spec file.
TowerSystem load_system(const std::string& name_or_path);

std::string system_to_json(const TowerSystem& sys, int depth);

std::vector<int> parse_word(const std::string& text);
std::string word_to_string(const std::vector<int>& word);

}  // namespace adic
