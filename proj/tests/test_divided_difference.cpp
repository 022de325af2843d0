#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "choquet/divided_difference.hpp"
#include "choquet/errors.hpp"
#include "choquet/quadrature.hpp"
#include "oracles.hpp"

using namespace choquet;

namespace {

// Textbook recursive definition, written independently of the library.
double dd_recursive(const std::function<double(double)>& f, std::vector<double> a) {
  if (a.size() == 1) return f(a[0]);
  std::vector<double> head(a.begin(), a.end() - 1);
  std::vector<double> tail(a.begin() + 1, a.end());
  return (dd_recursive(f, tail) - dd_recursive(f, head)) / (a.back() - a.front());
}

double tp_plus(double x, int p) { return x > 0 ? std::pow(x, p) : 0.0; }
double tp_minus(double x, int p) { return x < 0 ? std::pow(x, p) : 0.0; }

// Rational (distinct-knot) form of the divided difference in extended precision.
long double dd_rational_long(const std::function<long double(long double)>& f,
                             const std::vector<double>& t) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < t.size(); ++i) {
    long double denom = 1.0L;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j != i) denom *= static_cast<long double>(t[i]) - t[j];
    }
    sum += f(t[i]) / denom;
  }
  return sum;
}

std::vector<double> random_knots(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> k(count);
  for (double& x : k) x = unif(rng);
  return k;
}

const std::vector<double> kFour{0.0, 0.55, 0.8, 1.0};

}  // namespace

TEST_CASE("partition_knots splits at y with ties on the upper side") {
  const std::vector<double> k{0.3, 0.1, 0.5, 0.3};
  const auto p = partition_knots(k, 0.3);
  CHECK(p.below.size() == 1);
  CHECK(p.at_or_above.size() == 3);
  for (double c : p.at_or_above) CHECK(c >= 0.3);
}

TEST_CASE("tp_plus_dd") {
  CHECK(tp_plus_dd(kFour, -0.5) == 0.0);
  CHECK(tp_plus_dd(kFour, 1.5) == 0.0);
  const double expected = dd_recursive([](double x) { return tp_plus(x - 0.5, 2); }, kFour);
  CHECK(tp_plus_dd(kFour, 0.5) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(tp_dd_distinct(kFour, 0.5, TruncatedSide::plus, 2) ==
        doctest::Approx(tp_plus_dd(kFour, 0.5)).epsilon(1e-12));
  CHECK_THROWS(tp_plus_dd(std::vector<double>{1.0}, 0.5));
  CHECK_THROWS(tp_plus_dd(std::vector<double>{0.0, NAN}, 0.5));
}

TEST_CASE("tp_minus_dd") {
  CHECK(tp_minus_dd(kFour, 1.5) == 1.0);
  CHECK(tp_minus_dd(kFour, -0.5) == 0.0);
  const double v = tp_minus_dd(kFour, 0.5);
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  const double plus3 = dd_recursive([](double x) { return tp_plus(x - 0.5, 3); }, kFour);
  CHECK(v == doctest::Approx(1.0 - plus3).epsilon(1e-12));
  const double minus3 = dd_recursive([](double x) { return tp_minus(x - 0.5, 3); }, kFour);
  CHECK(v == doctest::Approx(minus3).epsilon(1e-12));
}

TEST_CASE("tp_dd_distinct") {
  CHECK(tp_dd_distinct(std::vector<double>{0.0, 1.0}, -1.0, TruncatedSide::plus, 1) ==
        doctest::Approx(1.0));
  CHECK(tp_dd_distinct(std::vector<double>{0.0, 0.5, 1.0}, 0.0, TruncatedSide::plus, 2) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(tp_dd_distinct(std::vector<double>{0.0, 0.5, 0.5}, 0.2, TruncatedSide::plus, 1),
                  RepeatedKnotError);
  CHECK_THROWS_AS(
      tp_dd_distinct(std::vector<double>{0.0, 0.5, 0.5 + 1e-11}, 0.2, TruncatedSide::minus, 2),
      RepeatedKnotError);
}

TEST_CASE("bspline") {
  CHECK(bspline(std::vector<double>{0.0, 1.0}, 0.5) == doctest::Approx(1.0));
  CHECK(bspline(std::vector<double>{0.0, 0.5, 1.0}, 0.5) == doctest::Approx(2.0));
  CHECK(bspline(kFour, -0.1) == 0.0);
  CHECK(bspline(kFour, 1.1) == 0.0);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto knots = random_knots(rng, 2 + trial % 6);
    const double lo = *std::min_element(knots.begin(), knots.end());
    const double hi = *std::max_element(knots.begin(), knots.end());
    for (int k = 0; k <= 50; ++k) CHECK(bspline(knots, lo + (hi - lo) * k / 50.0) >= 0.0);
    const double mass =
        integrate_piecewise([&](double t) { return bspline(knots, t); }, lo, hi, knots, 1e-12);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("dd_generic") {
  CHECK(dd_generic([](double) { return 1.0; }, std::vector<double>{0.0, 0.3, 0.9}) ==
        doctest::Approx(0.0));
  CHECK(dd_generic([](double x) { return x * x; }, std::vector<double>{0.0, 1.0, 2.0}) ==
        doctest::Approx(1.0));
  CHECK(dd_generic([](double x) { return std::exp(x); }, std::vector<double>{0.0, 1.0}) ==
        doctest::Approx(std::numbers::e - 1.0));
  CHECK_THROWS_AS(dd_generic([](double x) { return x; }, std::vector<double>{0.2, 0.2}),
                  RepeatedKnotError);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto knots = random_knots(rng, 2 + trial % 5);
    auto f = [](double x) { return std::sin(3.0 * x) + x * x * x; };
    CHECK(dd_generic(f, knots) == doctest::Approx(dd_recursive(f, knots)).epsilon(1e-8));
  }
}

TEST_CASE("recurrence agrees with the rational formula on random distinct knots") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unif(-0.1, 1.1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto knots = random_knots(rng, n + 1);
    const long double y = unif(rng);
    const int deg = static_cast<int>(n);
    const long double plus_ref = dd_rational_long(
        [&](long double x) { return x > y ? std::pow(x - y, deg - 1) : 0.0L; }, knots);
    const long double minus_ref = dd_rational_long(
        [&](long double x) { return x < y ? std::pow(x - y, deg) : 0.0L; }, knots);
    CAPTURE(trial);
    const double plus = tp_plus_dd(knots, double(y));
    CHECK(std::abs(plus - plus_ref) <= 1e-9 * std::max(1.0L, std::abs(plus_ref)));
    const double minus = tp_minus_dd(knots, double(y));
    CHECK(std::abs(minus - minus_ref) <= 1e-9 * std::max(1.0L, std::abs(minus_ref)));
    // the double-precision rational form inherits the conditioning of the knot gaps
    const double rational = tp_dd_distinct(knots, double(y), TruncatedSide::plus, deg - 1);
    double min_gap = 1.0;
    for (std::size_t a = 0; a < knots.size(); ++a) {
      for (std::size_t b = a + 1; b < knots.size(); ++b) {
        min_gap = std::min(min_gap, std::abs(knots[a] - knots[b]));
      }
    }
    if (min_gap > 1e-2) {
      CHECK(std::abs(plus - rational) <= 1e-9 * std::max(1.0, std::abs(rational)));
    }
  }
}

TEST_CASE("degree-n complement identity") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unif(-0.2, 1.2);
  for (int trial = 0; trial < 200; ++trial) {
    auto knots = random_knots(rng, 2 + trial % 8);
    if (trial % 3 == 0) knots[1] = knots[0];  // repeats are fine on this path
    const double y = unif(rng);
    CHECK(std::abs(tp_minus_dd(knots, y) + tp_plus_dd_top(knots, y) - 1.0) <= 1e-10);
  }
}

TEST_CASE("symmetry under knot permutations") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    auto knots = random_knots(rng, 2 + trial % 7);
    const double y = 0.5;
    const double plus = tp_plus_dd(knots, y);
    const double minus = tp_minus_dd(knots, y);
    std::shuffle(knots.begin(), knots.end(), rng);
    CHECK(tp_plus_dd(knots, y) == doctest::Approx(plus).epsilon(1e-12));
    CHECK(tp_minus_dd(knots, y) == doctest::Approx(minus).epsilon(1e-12));
  }
}

TEST_CASE("tp_minus_dd is continuous across knot values") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto knots = random_knots(rng, 3 + trial % 5);
    for (double a : knots) {
      const double left = tp_minus_dd(knots, a - 1e-12);
      const double right = tp_minus_dd(knots, a + 1e-12);
      CHECK(std::abs(left - tp_minus_dd(knots, a)) <= 1e-9);
      CHECK(std::abs(right - tp_minus_dd(knots, a)) <= 1e-9);
    }
  }
}

TEST_CASE("repeated knots stay finite on the recurrence path") {
  const std::vector<double> k{0.2, 0.2, 0.2, 0.7};
  const double v = tp_minus_dd(k, 0.5);
  CHECK(std::isfinite(v));
  CHECK(v >= 0.0);
  CHECK(v <= 1.0);
  CHECK(std::isfinite(tp_plus_dd(k, 0.5)));
  CHECK(std::isfinite(tp_plus_dd(k, 0.2)));
}
