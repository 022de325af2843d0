#include "choquet/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "choquet/errors.hpp"

namespace choquet {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_open(std::uint64_t word) {
  return (static_cast<double>(word >> 12) + 0.5) * 0x1.0p-52;
}

namespace {

void fill_chunk(const SetFunction& game, const QuantileModel& qm, std::uint64_t chunk_seed,
                std::span<double> out) {
  const std::size_t n = game.size();
  std::mt19937_64 engine(chunk_seed);
  std::vector<double> x(n);
  std::vector<std::size_t> order(n);
  for (double& y : out) {
    for (double& xi : x) xi = qm.quantile(unit_open(engine()));
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
    y = sum;
  }
}

}  // namespace

std::vector<double> draw(const SetFunction& game, const QuantileModel& qm,
                         std::size_t n_samples, const SampleOptions& options) {
  const std::size_t chunks = (n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<std::uint64_t> seeds(chunks);
  std::uint64_t state = options.seed;
  for (auto& s : seeds) s = splitmix64(state);

  std::vector<double> samples(n_samples);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(chunks, 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      const std::size_t begin = c * kChunkSize;
      const std::size_t count = std::min(kChunkSize, n_samples - begin);
      fill_chunk(game, qm, seeds[c], std::span<double>(samples).subspan(begin, count));
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return samples;
}

MCReport summarize(std::vector<double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw ValidationError("need at least 2 samples");
  MCReport report;
  report.n_samples = n;
  double sum = 0.0;
  for (double y : samples) sum += y;
  report.mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double y : samples) ss += (y - report.mean) * (y - report.mean);
  report.sd = std::sqrt(ss / static_cast<double>(n - 1));
  report.standard_error = report.sd / std::sqrt(static_cast<double>(n));
  std::sort(samples.begin(), samples.end());
  report.ecdf = std::move(samples);
  return report;
}

MCReport sample(const SetFunction& game, Law law, std::size_t n_samples, std::uint64_t seed,
                unsigned threads) {
  if (n_samples < 2) throw ValidationError("need at least 2 samples");
  const auto qm = make_quantile_model(law);
  return summarize(draw(game, *qm, n_samples, {seed, threads}));
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.size() < 2) throw ValidationError("need at least 2 samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  if (!std::is_sorted(sorted.begin(), sorted.end())) std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_band(std::size_t n_samples, double critical) {
  return critical / std::sqrt(static_cast<double>(n_samples));
}

}  // namespace choquet
