#include "choquet/combinatorics.hpp"

#include <algorithm>

namespace choquet {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

double factorial(std::size_t n) {
  double result = 1.0;
  for (std::size_t i = 2; i <= n; ++i) result *= static_cast<double>(i);
  return result;
}

}  // namespace choquet
