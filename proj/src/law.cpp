#include "choquet/law.hpp"

#include "choquet/errors.hpp"

namespace choquet {

Law parse_law(std::string_view name) {
  if (name == "uniform") return Law::uniform;
  if (name == "exponential") return Law::exponential;
  if (name == "normal") return Law::normal;
  throw ValidationError("unknown law \"" + std::string(name) +
                        "\" (expected uniform, exponential or normal)");
}

std::string_view law_name(Law law) {
  switch (law) {
    case Law::uniform: return "uniform";
    case Law::exponential: return "exponential";
    case Law::normal: return "normal";
  }
  return "unknown";
}

}  // namespace choquet
