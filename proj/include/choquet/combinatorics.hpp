#pragma once

#include <cstddef>

namespace choquet {

/// n choose k as a double; 0 when k > n.
double binomial(std::size_t n, std::size_t k);

double factorial(std::size_t n);

}  // namespace choquet
