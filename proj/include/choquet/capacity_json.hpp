#pragma once

// Capacity file format:
//   {"n": 3, "values": {"1": 0.1, "2": 0.2, "3": 0.55, "1,2": 0.7,
//                       "1,3": 0.8, "2,3": 0.6, "1,2,3": 1.0}}
// Keys list 1-based attribute indices, comma separated, strictly ascending.
// The empty set may appear under the key "∅" and must then be 0.

#include <filesystem>
#include <string>
#include <string_view>

#include "choquet/capacity.hpp"
#include "json.hpp"

namespace choquet {

/// Parses a subset key such as "1,3" into a mask; "∅" maps to 0.
Mask parse_subset_key(std::string_view key, std::size_t n);
std::string subset_key(Mask mask);

SetFunction game_from_json(const nlohmann::json& doc,
                           std::size_t max_attributes = kDefaultMaxAttributes);
nlohmann::json game_to_json(const SetFunction& game);

SetFunction read_game_file(const std::filesystem::path& path,
                           std::size_t max_attributes = kDefaultMaxAttributes);

}  // namespace choquet
