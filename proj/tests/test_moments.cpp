#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <random>

#include "choquet/moments.hpp"
#include "choquet/monte_carlo.hpp"
#include "choquet/order_statistics.hpp"
#include "oracles.hpp"

using namespace choquet;

namespace {

// Multiplicity form of the second moment for uniform inputs: each nested pair
// T1 <= T2 contributes through E[U_{..}^a U_{..}^b] directly.
double second_moment_pairs_bruteforce(const SetFunction& g, const OrderStatisticMoments& stats) {
  const std::size_t n = g.size();
  const SpacingMoments sp(stats);
  double sum = 0.0;
  // Ordered pairs (T1, T2) with either T1 < T2 or T2 < T1 counted separately.
  for (Mask a = 1; a <= g.full_mask(); ++a) {
    for (Mask b = 1; b <= g.full_mask(); ++b) {
      if ((a & b) != a && (a & b) != b) continue;
      const Mask small = (a & b) == a ? a : b;
      const Mask big = small == a ? b : a;
      const std::size_t s = std::popcount(small), t = std::popcount(big);
      sum += g[a] * g[b] / (oracle::binom(int(t), int(s)) * oracle::binom(int(n), int(t))) *
             sp.d2(s, t);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("reference capacity under the three laws") {
  const auto g = oracle::reference_capacity();
  const auto u = moments_report(g, UniformOrderStatistics(3));
  CHECK(u.mean == doctest::Approx(0.495).epsilon(0.001 / 0.495));
  CHECK(u.sd == doctest::Approx(0.183).epsilon(0.001 / 0.183));
  const auto e = moments_report(g, ExponentialOrderStatistics(3));
  CHECK(e.sd == doctest::Approx(0.624).epsilon(0.001 / 0.624));
  CHECK(e.mean == doctest::Approx(29.0 / 30.0).epsilon(1e-13));
  const auto nq = normal_quantile_model();
  const auto n3 = moments_report(g, DavidJohnsonOrderStatistics(nq, 3, DjOrder::third));
  CHECK(std::abs(n3.mean - (-0.014)) <= 0.003);
  CHECK(std::abs(n3.sd - 0.615) <= 0.01);
  CHECK(u.variance == doctest::Approx(u.second_moment - u.mean * u.mean));
}

TEST_CASE("trivial games") {
  const SetFunction zero(3, std::vector<double>(8, 0.0));
  const auto r = moments_report(zero, ExponentialOrderStatistics(3));
  CHECK(r.mean == 0.0);
  CHECK(r.sd == 0.0);
  CHECK(choquet_mean(oracle::max_capacity(4), UniformOrderStatistics(4)) ==
        doctest::Approx(0.8));
  CHECK(choquet_mean(oracle::min_capacity(5), ExponentialOrderStatistics(5)) ==
        doctest::Approx(0.2));
}

TEST_CASE("additive capacity gives E[X] for every law") {
  const auto g = oracle::additive({0.1, 0.4, 0.2, 0.3});
  CHECK(choquet_mean(g, UniformOrderStatistics(4)) == doctest::Approx(0.5));
  CHECK(choquet_mean(g, ExponentialOrderStatistics(4)) == doctest::Approx(1.0));
  const auto nq = normal_quantile_model();
  CHECK(std::abs(choquet_mean(g, DavidJohnsonOrderStatistics(nq, 4))) < 1e-12);
}

TEST_CASE("spacings") {
  for (std::size_t n : {1, 3, 6}) {
    const ExponentialOrderStatistics stats(n);
    const SpacingMoments sp(stats);
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(sp.d1(k) >= 0.0);
      CHECK(sp.d2(k, k) >= 0.0);
      // Exponential spacing D_k = X_{n-k+1} - X_{n-k} is exponential with rate k.
      CHECK(sp.d1(k) == doctest::Approx(1.0 / k));
      for (std::size_t l = 1; l <= n; ++l) CHECK(sp.d2(k, l) == doctest::Approx(sp.d2(l, k)));
    }
  }
  const UniformOrderStatistics u(3);
  CHECK_THROWS(SpacingMoments(u).d1(0));
  CHECK_THROWS(SpacingMoments(u).d1(4));
}

TEST_CASE("subset formulas equal the chain-average form") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto g = oracle::random_game(n, rng);
    for (Law law : {Law::uniform, Law::exponential, Law::normal}) {
      const auto stats = make_order_statistics(law, n);
      const auto [m1, m2] = oracle::chain_average_moments(
          g, [&](int i) { return stats->mean(i); },
          [&](int i, int j) { return stats->product(i, j); });
      CHECK(std::abs(choquet_mean(g, *stats) - m1) <= 1e-12);
      CHECK(std::abs(second_raw_moment(g, *stats) - m2) <= 1e-12);
      CHECK(std::abs(second_raw_moment(g, *stats) - second_moment_pairs_bruteforce(g, *stats)) <=
            1e-12);
    }
  }
}

TEST_CASE("variance is nonnegative for exact providers") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto g = oracle::random_game(n, rng);
    CHECK(moments_report(g, UniformOrderStatistics(n)).variance >= -1e-10);
    CHECK(moments_report(g, ExponentialOrderStatistics(n)).variance >= -1e-10);
  }
}

TEST_CASE("Monte Carlo agreement on random n = 4 capacities") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = oracle::random_capacity(4, rng);
    for (Law law : {Law::uniform, Law::exponential}) {
      const auto stats = make_order_statistics(law, 4);
      const auto mc = sample(g, law, 1000000, 1000 + trial);
      CHECK(std::abs(choquet_mean(g, *stats) - mc.mean) <= 3 * mc.standard_error);
    }
  }
}

TEST_CASE("size mismatch") {
  CHECK_THROWS(choquet_mean(oracle::reference_capacity(), UniformOrderStatistics(4)));
}
