#pragma once

// choquet-dist command line. Exit codes: 0 success, 2 invalid input / limit /
// regularity violation / not a capacity, 1 anything else.

#include <cstddef>
#include <ostream>
#include <string_view>
#include <vector>

namespace choquet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

/// Parses "a:b:steps" into steps equally spaced points from a to b inclusive.
std::vector<double> parse_grid(std::string_view spec);

/// n_max from CHOQUET_NMAX, else the library default.
std::size_t attribute_limit_from_env();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace choquet
