#include "choquet/capacity_json.hpp"

#include <charconv>
#include <fstream>

#include "choquet/errors.hpp"

namespace choquet {

namespace {
constexpr std::string_view kEmptySetKey = "\xE2\x88\x85";  // U+2205
}

Mask parse_subset_key(std::string_view key, std::size_t n) {
  if (key == kEmptySetKey) return 0;
  Mask mask = 0;
  std::size_t last = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = key.find(',', pos);
    const std::string_view token =
        key.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t index = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw ValidationError("malformed subset key \"" + std::string(key) + "\"");
    }
    if (index == 0 || index > n) {
      throw ValidationError("subset key \"" + std::string(key) + "\" names attribute " +
                            std::to_string(index) + " outside 1.." + std::to_string(n));
    }
    if (index <= last) {
      throw ValidationError("subset key \"" + std::string(key) +
                            "\" must list attributes in strictly ascending order");
    }
    last = index;
    mask |= Mask{1} << (index - 1);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return mask;
}

std::string subset_key(Mask mask) {
  if (mask == 0) return std::string(kEmptySetKey);
  std::string key;
  for (std::size_t a : attributes_of(mask)) {
    if (!key.empty()) key += ',';
    key += std::to_string(a);
  }
  return key;
}

SetFunction game_from_json(const nlohmann::json& doc, std::size_t max_attributes) {
  if (!doc.is_object()) throw ValidationError("capacity document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ValidationError("capacity document needs an integer field \"n\"");
  }
  if (!doc.contains("values") || !doc["values"].is_object()) {
    throw ValidationError("capacity document needs an object field \"values\"");
  }
  const auto n_signed = doc["n"].get<long long>();
  if (n_signed < 1) throw ValidationError("\"n\" must be at least 1");
  const auto n = static_cast<std::size_t>(n_signed);
  if (n > kMaxStoredAttributes) {
    throw LimitError("n = " + std::to_string(n) + " exceeds n_max = " +
                     std::to_string(max_attributes));
  }
  std::map<Mask, double> values;
  for (const auto& [key, value] : doc["values"].items()) {
    if (!value.is_number()) {
      throw ValidationError("value for subset \"" + key + "\" is not a number");
    }
    const Mask mask = parse_subset_key(key, n);
    if (!values.emplace(mask, value.get<double>()).second) {
      throw ValidationError("subset \"" + key + "\" given twice");
    }
  }
  return make_game(n, values, max_attributes);
}

nlohmann::json game_to_json(const SetFunction& game) {
  nlohmann::json values = nlohmann::json::object();
  for (Mask m = 1; m <= game.full_mask(); ++m) values[subset_key(m)] = game[m];
  return {{"n", game.size()}, {"values", values}};
}

SetFunction read_game_file(const std::filesystem::path& path, std::size_t max_attributes) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open capacity file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("capacity file " + path.string() + " is not valid JSON: " + e.what());
  }
  return game_from_json(doc, max_attributes);
}

}  // namespace choquet
