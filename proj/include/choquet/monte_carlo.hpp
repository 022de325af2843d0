#pragma once

// Seedable Monte Carlo sampling of Y = C_nu(X_1..X_n).
//
// Generator: the seed drives a SplitMix64 sequence whose k-th output seeds a
// std::mt19937_64 for chunk k of kChunkSize draws. A raw 64-bit word x maps to
// u = ((x >> 11) + 0.5) * 2^-53 in (0, 1), and X = G(u) with the law's quantile
// function. Output does not depend on the number of threads.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/law.hpp"
#include "choquet/quantile.hpp"

namespace choquet {

inline constexpr std::size_t kChunkSize = 65536;
/// Asymptotic KS critical constants at the 5% and 1% levels.
inline constexpr double kKsCritical05 = 1.36;
inline constexpr double kKsCritical01 = 1.63;

struct MCReport {
  std::size_t n_samples = 0;
  double mean = 0.0;
  double sd = 0.0;
  double standard_error = 0.0;
  std::vector<double> ecdf;  // sorted samples
  std::optional<double> ks_vs_reference;
};

struct SampleOptions {
  std::uint64_t seed = 0;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Raw draws in generation order.
std::vector<double> draw(const SetFunction& game, const QuantileModel& qm,
                         std::size_t n_samples, const SampleOptions& options);

MCReport sample(const SetFunction& game, Law law, std::size_t n_samples, std::uint64_t seed,
                unsigned threads = 0);
MCReport summarize(std::vector<double> samples);

/// sup |ECDF - F| over both one-sided gaps at each sample point.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// c / sqrt(n) for the given critical constant.
double ks_band(std::size_t n_samples, double critical = kKsCritical01);

std::uint64_t splitmix64(std::uint64_t& state);
double unit_open(std::uint64_t word);

}  // namespace choquet
