#pragma once

#include <string>
#include <string_view>

namespace choquet {

/// Input laws with built-in support.
enum class Law { uniform, exponential, normal };

Law parse_law(std::string_view name);
std::string_view law_name(Law law);

}  // namespace choquet
