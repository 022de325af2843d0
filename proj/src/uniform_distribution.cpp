#include "choquet/uniform_distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "choquet/combinatorics.hpp"
#include "choquet/divided_difference.hpp"
#include "choquet/errors.hpp"

namespace choquet {

UniformChoquetDist::UniformChoquetDist(SetFunction game, std::size_t max_attributes)
    : game_(std::move(game)),
      max_attributes_(max_attributes),
      n_factorial_(factorial(game_.size())) {
  if (game_.size() > max_attributes_) {
    throw LimitError("n = " + std::to_string(game_.size()) + " exceeds n_max = " +
                     std::to_string(max_attributes_));
  }
}

double UniformChoquetDist::cdf_unclamped(double y) const {
  double sum = 0.0;
  for_each_chain(
      game_, [&](const Chain& c) { sum += tp_minus_dd(c.nu_chain, y); }, max_attributes_);
  return sum / n_factorial_;
}

double UniformChoquetDist::cdf(double y) const {
  return std::clamp(cdf_unclamped(y), 0.0, 1.0);
}

double UniformChoquetDist::pdf(double y) const {
  double sum = 0.0;
  for_each_chain(
      game_, [&](const Chain& c) { sum += tp_plus_dd(c.nu_chain, y); }, max_attributes_);
  // n! / n = (n - 1)!
  return sum * static_cast<double>(game_.size()) / n_factorial_;
}

double UniformChoquetDist::raw_moment(unsigned r, unsigned max_order) const {
  if (r == 0) throw ValidationError("moment order must be at least 1");
  if (r > max_order) {
    throw LimitError("moment order " + std::to_string(r) + " exceeds r_max = " +
                     std::to_string(max_order));
  }
  const std::size_t n = game_.size();
  const Mask full = game_.full_mask();
  if (static_cast<double>(r) * std::pow(3.0, static_cast<double>(n)) > kMaxMomentTerms) {
    throw LimitError("nested-chain sum too large for n = " + std::to_string(n));
  }
  // level[M] = sum over chains T_1 <= ... <= T_i = M of prod_{k < i} nu(T_k) /
  // C(|T_{k+1}|, |T_k|), built up one level at a time by submask iteration.
  std::vector<double> level(std::size_t{full} + 1, 1.0);
  level[0] = 0.0;
  for (unsigned i = 1; i <= r; ++i) {
    std::vector<double> next(level.size(), 0.0);
    const bool last = i == r;
    for (Mask m = last ? full : 1; m <= full; ++m) {
      const std::size_t outer = std::popcount(m);
      double sum = 0.0;
      for (Mask s = m; s != 0; s = (s - 1) & m) {
        const double prev = i == 1 ? 1.0 : level[s];
        if (prev == 0.0) continue;
        sum += game_[s] / binomial(outer, std::popcount(s)) * prev;
      }
      next[m] = sum;
    }
    level.swap(next);
  }
  return level[full] / binomial(n + r, r);
}

double UniformChoquetDist::expect_gn(const std::function<double(double)>& g) const {
  double sum = 0.0;
  for_each_chain(
      game_, [&](const Chain& c) { sum += dd_generic(g, c.nu_chain); }, max_attributes_);
  return sum;
}

std::vector<double> UniformChoquetDist::breakpoints() const {
  std::vector<double> values(game_.values().begin(), game_.values().end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

double UniformChoquetDist::support_min() const {
  return *std::min_element(game_.values().begin(), game_.values().end());
}

double UniformChoquetDist::support_max() const {
  return *std::max_element(game_.values().begin(), game_.values().end());
}

double uniform_mean_closed_form(const SetFunction& game) {
  const std::size_t n = game.size();
  double sum = 0.0;
  for (Mask m = 1; m <= game.full_mask(); ++m) sum += game[m] / binomial(n, std::popcount(m));
  return sum / static_cast<double>(n + 1);
}

double uniform_second_moment_closed_form(const SetFunction& game) {
  const std::size_t n = game.size();
  double sum = 0.0;
  for (Mask t2 = 1; t2 <= game.full_mask(); ++t2) {
    const auto size2 = static_cast<std::size_t>(std::popcount(t2));
    const double outer = binomial(n, size2);
    for (Mask t1 = t2; t1 != 0; t1 = (t1 - 1) & t2) {
      sum += game[t1] * game[t2] / (binomial(size2, std::popcount(t1)) * outer);
    }
  }
  return 2.0 * sum / (static_cast<double>(n + 1) * static_cast<double>(n + 2));
}

}  // namespace choquet
