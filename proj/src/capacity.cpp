#include "choquet/capacity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "choquet/combinatorics.hpp"
#include "choquet/errors.hpp"

namespace choquet {

namespace {

void require_attribute_count(std::size_t n, std::size_t max_attributes) {
  if (n == 0) throw ValidationError("a game needs at least one attribute");
  if (n > max_attributes) {
    throw LimitError("n = " + std::to_string(n) + " exceeds n_max = " +
                     std::to_string(max_attributes));
  }
}

}  // namespace

Mask mask_of(std::span<const std::size_t> attributes) {
  Mask mask = 0;
  for (std::size_t a : attributes) {
    if (a == 0 || a > kMaxStoredAttributes) {
      throw ValidationError("attribute index " + std::to_string(a) + " out of range");
    }
    mask |= Mask{1} << (a - 1);
  }
  return mask;
}

Mask mask_of(std::initializer_list<std::size_t> attributes) {
  return mask_of(std::span<const std::size_t>(attributes.begin(), attributes.size()));
}

std::vector<std::size_t> attributes_of(Mask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i + 1);
  }
  return out;
}

SetFunction::SetFunction(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  require_attribute_count(n, kMaxStoredAttributes);
  if (values_.size() != (std::size_t{1} << n)) {
    throw ValidationError("set function on " + std::to_string(n) + " attributes needs " +
                          std::to_string(std::size_t{1} << n) + " values, got " +
                          std::to_string(values_.size()));
  }
  if (values_[0] != 0.0) throw ValidationError("game value on the empty set must be 0");
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("set function values must be finite");
  }
}

SetFunction make_game(std::size_t n, const std::map<Mask, double>& values,
                      std::size_t max_attributes) {
  require_attribute_count(n, std::min(max_attributes, kMaxStoredAttributes));
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> table(size, 0.0);
  std::vector<bool> seen(size, false);
  for (const auto& [mask, value] : values) {
    if (mask >= size) {
      throw ValidationError("subset mask " + std::to_string(mask) + " is not a subset of N");
    }
    if (mask == 0 && value != 0.0) {
      throw ValidationError("game value on the empty set must be 0");
    }
    table[mask] = value;
    seen[mask] = true;
  }
  for (Mask m = 1; m < size; ++m) {
    if (!seen[m]) {
      std::string key;
      for (std::size_t a : attributes_of(m)) key += (key.empty() ? "" : ",") + std::to_string(a);
      throw ValidationError("missing value for subset {" + key + "}");
    }
  }
  return SetFunction(n, std::move(table));
}

CapacityCheck check_capacity(const SetFunction& game) {
  CapacityCheck check;
  const Mask full = game.full_mask();
  for (Mask s = 0; s <= full && !check.violating_pair; ++s) {
    for (std::size_t i = 0; i < game.size(); ++i) {
      const Mask bit = Mask{1} << i;
      if (s & bit) continue;
      if (game[s] - game[s | bit] > kMonotonicitySlack) {
        check.is_monotone = false;
        check.violating_pair = std::make_pair(s, s | bit);
        break;
      }
    }
  }
  check.is_normalized = std::abs(game.total() - 1.0) <= kNormalizationTolerance;
  return check;
}

bool is_symmetric(const SetFunction& game, double tol) {
  std::vector<std::optional<double>> level(game.size() + 1);
  for (Mask m = 0; m <= game.full_mask(); ++m) {
    auto& ref = level[std::popcount(m)];
    if (!ref) {
      ref = game[m];
    } else if (std::abs(*ref - game[m]) > tol) {
      return false;
    }
  }
  return true;
}

Chain chain_for(const SetFunction& game, std::span<const std::size_t> sigma) {
  const std::size_t n = game.size();
  if (sigma.size() != n) throw ValidationError("permutation length does not match n");
  Chain chain;
  chain.sigma.assign(sigma.begin(), sigma.end());
  chain.nu_chain.resize(n + 1);
  chain.weights.resize(n);
  chain.nu_chain[0] = 0.0;
  Mask set = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = sigma[i];
    if (a == 0 || a > n || (set & (Mask{1} << (a - 1)))) {
      throw ValidationError("sigma is not a permutation of {1..n}");
    }
    set |= Mask{1} << (a - 1);
    chain.nu_chain[i + 1] = game[set];
    chain.weights[i] = chain.nu_chain[i + 1] - chain.nu_chain[i];
  }
  return chain;
}

void for_each_chain(const SetFunction& game, const std::function<void(const Chain&)>& visit,
                    std::size_t max_attributes) {
  const std::size_t n = game.size();
  require_attribute_count(n, max_attributes);
  Chain chain;
  chain.sigma.resize(n);
  std::iota(chain.sigma.begin(), chain.sigma.end(), std::size_t{1});
  chain.nu_chain.assign(n + 1, 0.0);
  chain.weights.assign(n, 0.0);
  do {
    Mask set = 0;
    for (std::size_t i = 0; i < n; ++i) {
      set |= Mask{1} << (chain.sigma[i] - 1);
      chain.nu_chain[i + 1] = game[set];
      chain.weights[i] = chain.nu_chain[i + 1] - chain.nu_chain[i];
    }
    visit(chain);
  } while (std::next_permutation(chain.sigma.begin(), chain.sigma.end()));
}

std::vector<Chain> enumerate_chains(const SetFunction& game, std::size_t max_attributes) {
  std::vector<Chain> chains;
  chains.reserve(static_cast<std::size_t>(factorial(game.size())));
  for_each_chain(game, [&](const Chain& c) { chains.push_back(c); }, max_attributes);
  return chains;
}

double choquet(const SetFunction& game, std::span<const double> x) {
  const std::size_t n = game.size();
  if (x.size() != n) {
    throw ValidationError("input vector has length " + std::to_string(x.size()) +
                          ", expected " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  double sum = 0.0;
  double previous = 0.0;
  Mask set = 0;
  for (std::size_t idx : order) {
    set |= Mask{1} << idx;
    const double current = game[set];
    sum += (current - previous) * x[idx];
    previous = current;
  }
  return sum;
}

double orness(const SetFunction& game) {
  const std::size_t n = game.size();
  if (n < 2) throw ValidationError("orness is defined for n >= 2");
  const CapacityCheck check = check_capacity(game);
  if (!check.is_capacity()) throw ValidationError("orness requires a capacity");
  // (n + 1) E[Y] = sum_T nu(T) / C(n, |T|)
  double scaled_mean = 0.0;
  for (Mask m = 1; m <= game.full_mask(); ++m) {
    scaled_mean += game[m] / binomial(n, std::popcount(m));
  }
  return (scaled_mean - 1.0) / static_cast<double>(n - 1);
}

}  // namespace choquet
