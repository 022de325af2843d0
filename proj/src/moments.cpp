#include "choquet/moments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "choquet/combinatorics.hpp"

namespace choquet {

namespace {

void require_matching_size(const SetFunction& game, const OrderStatisticMoments& stats) {
  if (game.size() != stats.sample_size()) {
    throw std::invalid_argument("order statistics are for n = " +
                                std::to_string(stats.sample_size()) + ", game has n = " +
                                std::to_string(game.size()));
  }
}

}  // namespace

SpacingMoments::SpacingMoments(const OrderStatisticMoments& stats) : stats_(stats) {}

double SpacingMoments::os_mean(std::size_t i) const { return i == 0 ? 0.0 : stats_.mean(i); }

double SpacingMoments::os_product(std::size_t i, std::size_t j) const {
  return (i == 0 || j == 0) ? 0.0 : stats_.product(i, j);
}

double SpacingMoments::d1(std::size_t k) const {
  const std::size_t n = stats_.sample_size();
  if (k == 0 || k > n) throw std::out_of_range("spacing index out of range");
  return os_mean(n - k + 1) - os_mean(n - k);
}

double SpacingMoments::d2(std::size_t k, std::size_t l) const {
  const std::size_t n = stats_.sample_size();
  if (k == 0 || k > n || l == 0 || l > n) throw std::out_of_range("spacing index out of range");
  const std::size_t a = n - k + 1, b = n - k;
  const std::size_t c = n - l + 1, e = n - l;
  return os_product(a, c) - os_product(a, e) - os_product(b, c) + os_product(b, e);
}

double choquet_mean(const SetFunction& game, const OrderStatisticMoments& stats) {
  require_matching_size(game, stats);
  const std::size_t n = game.size();
  std::vector<double> level(n + 1, 0.0);
  for (Mask m = 1; m <= game.full_mask(); ++m) level[std::popcount(m)] += game[m];
  const SpacingMoments spacing(stats);
  double sum = 0.0;
  for (std::size_t t = 1; t <= n; ++t) sum += level[t] / binomial(n, t) * spacing.d1(t);
  return sum;
}

double second_raw_moment(const SetFunction& game, const OrderStatisticMoments& stats) {
  require_matching_size(game, stats);
  const std::size_t n = game.size();
  // pair[s][t] = sum over T1 strictly inside T2 with |T1| = s, |T2| = t of nu(T1) nu(T2)
  std::vector<double> pair((n + 1) * (n + 1), 0.0);
  std::vector<double> diagonal(n + 1, 0.0);
  for (Mask t2 = 1; t2 <= game.full_mask(); ++t2) {
    const double v2 = game[t2];
    const auto size2 = static_cast<std::size_t>(std::popcount(t2));
    diagonal[size2] += v2 * v2;
    if (v2 == 0.0) continue;
    for (Mask t1 = (t2 - 1) & t2; t1 != 0; t1 = (t1 - 1) & t2) {
      pair[static_cast<std::size_t>(std::popcount(t1)) * (n + 1) + size2] += game[t1] * v2;
    }
  }
  const SpacingMoments spacing(stats);
  double sum = 0.0;
  for (std::size_t t = 1; t <= n; ++t) {
    const double outer = binomial(n, t);
    sum += diagonal[t] / outer * spacing.d2(t, t);
    for (std::size_t s = 1; s < t; ++s) {
      sum += 2.0 * pair[s * (n + 1) + t] / (binomial(t, s) * outer) * spacing.d2(s, t);
    }
  }
  return sum;
}

MomentReport moments_report(const SetFunction& game, const OrderStatisticMoments& stats) {
  MomentReport report;
  report.mean = choquet_mean(game, stats);
  report.second_moment = second_raw_moment(game, stats);
  report.variance = report.second_moment - report.mean * report.mean;
  report.sd = std::sqrt(std::max(report.variance, 0.0));
  return report;
}

}  // namespace choquet
