#include "choquet/asymptotic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "choquet/combinatorics.hpp"
#include "choquet/errors.hpp"
#include "choquet/quadrature.hpp"

namespace choquet {

namespace {

constexpr double kInnerTolerance = 1e-9;
constexpr double kOuterTolerance = 1e-10;
// Keeps every node strictly inside (0, 1) even for the untrimmed laws.
constexpr double kMinTrim = 1e-300;
// Below this length the inner integral uses a fixed Gauss-Legendre rule: no
// adaptive rule reaches a relative tolerance on an interval only a few ulps
// wide.
constexpr double kShortInterval = 1e-4;

// Integrals starting near 0 are taken in s = log x: the integrands behave like
// functions of log x there (1 / |G| for the normal law), which is smooth in s.
double integrate_short(const Integrand& f, double a, double b, double tol) {
  if (b - a <= kShortInterval) return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
  if (b > 2.0 * a) {
    auto g = [&](double s) {
      const double x = std::exp(s);
      return f(x) * x;
    };
    return integrate(g, std::log(a), std::log(b), tol);
  }
  return integrate(f, a, b, tol);
}

double trim_for(const QuantileModel& qm) { return std::max(qm.integration_trim(), kMinTrim); }

// Pieces of [trim, 1 - trim] split at J's jumps and at 1/2. Pieces in the
// upper half are integrated in t = 1 - u so the right tail keeps its precision.
struct Piece {
  bool mirrored;
  double a;  // local coordinate range, a < b
  double b;
};

std::vector<Piece> pieces(const WeightFunction& J, double trim) {
  std::vector<double> points{trim, 0.5, 1.0 - trim};
  for (double p : J.breakpoints()) {
    if (p > trim && p < 1.0 - trim) points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Piece> out;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double lo = points[k - 1];
    const double hi = points[k];
    if (hi <= 0.5) {
      out.push_back({false, lo, hi});
    } else {
      out.push_back({true, k + 1 == points.size() ? trim : 1.0 - hi, 1.0 - lo});
    }
  }
  return out;
}

// Evaluation in a piece's local coordinate x (u = x, or u = 1 - x).
struct Frame {
  const WeightFunction& J;
  const QuantileModel& qm;
  bool mirrored;

  double u(double x) const { return mirrored ? 1.0 - x : x; }
  double one_minus_u(double x) const { return mirrored ? x : 1.0 - x; }
  double quantile(double x) const {
    return mirrored ? qm.quantile_complement(x) : qm.quantile(x);
  }
  double slope(double x) const {
    return mirrored ? qm.derivative_complement(1, x) : qm.derivative(1, x);
  }
  double weight(double x) const { return J(u(x)); }
};

}  // namespace

WeightFunction::WeightFunction(std::function<double(double)> eval,
                               std::vector<double> breakpoints)
    : eval_(std::move(eval)), breakpoints_(std::move(breakpoints)) {}

WeightFunction WeightFunction::from_weights(std::vector<double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw ValidationError("weight function needs at least one weight");
  std::vector<double> steps(n);
  for (std::size_t i = 1; i <= n; ++i) steps[i - 1] = static_cast<double>(n) * weights[n - i];
  std::vector<double> breaks;
  for (std::size_t i = 1; i < n; ++i) breaks.push_back(static_cast<double>(i) / n);
  auto eval = [steps = std::move(steps), n](double u) {
    const double scaled = std::ceil(u * static_cast<double>(n));
    const std::size_t i = std::clamp<std::size_t>(
        scaled < 1.0 ? 1 : static_cast<std::size_t>(scaled), 1, n);
    return steps[i - 1];
  };
  return WeightFunction(std::move(eval), std::move(breaks));
}

WeightFunction WeightFunction::from_chain(const Chain& chain) {
  return from_weights(chain.weights);
}

WeightFunction WeightFunction::power(double a) {
  return WeightFunction([a](double u) { return std::pow(u, a); }, {});
}

double alpha(const WeightFunction& J, const QuantileModel& qm) {
  double sum = 0.0;
  for (const Piece& piece : pieces(J, trim_for(qm))) {
    const Frame f{J, qm, piece.mirrored};
    sum += integrate_singular([&](double x) { return f.weight(x) * f.quantile(x); }, piece.a,
                              piece.b, kOuterTolerance);
  }
  return sum;
}

double beta2(const WeightFunction& J, const QuantileModel& qm) {
  // beta2 = 2 int J(u) u G'(u) K(u) du with K(u) = int_u^1 J(v) (1 - v) G'(v) dv.
  // With the inner integral on the right both integrands stay bounded for the
  // supported laws. K is carried from piece to piece, right to left.
  const auto parts = pieces(J, trim_for(qm));
  double total = 0.0;
  double carried = 0.0;  // K at the right end (in u) of the current piece
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const Piece& piece = *it;
    const Frame f{J, qm, piece.mirrored};
    auto inner = [&](double x) { return f.weight(x) * f.one_minus_u(x) * f.slope(x); };
    auto outer = [&](double x) {
      const double partial = piece.mirrored
                                 ? integrate_short(inner, piece.a, x, kInnerTolerance)
                                 : integrate_short(inner, x, piece.b, kInnerTolerance);
      return f.weight(x) * f.u(x) * f.slope(x) * (carried + partial);
    };
    total += integrate_singular(outer, piece.a, piece.b, kOuterTolerance);
    carried += integrate_short(inner, piece.a, piece.b, kInnerTolerance);
  }
  return 2.0 * total;
}

OwaMoments owa_moments(std::span<const double> weights, const OrderStatisticMoments& stats) {
  const std::size_t n = stats.sample_size();
  if (weights.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " +
                                std::to_string(weights.size()));
  }
  OwaMoments out;
  for (std::size_t i = 1; i <= n; ++i) out.mean += weights[i - 1] * stats.mean(n - i + 1);
  double second = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      second += weights[i - 1] * weights[j - 1] * stats.product(n - i + 1, n - j + 1);
    }
  }
  out.variance = second - out.mean * out.mean;
  return out;
}

MixtureApprox mixture_approx(const SetFunction& game, const OrderStatisticMoments& stats,
                             std::size_t max_attributes) {
  if (game.size() != stats.sample_size()) {
    throw std::invalid_argument("order statistics do not match the game size");
  }
  MixtureApprox mixture;
  const double weight = 1.0 / factorial(game.size());
  for_each_chain(
      game,
      [&](const Chain& chain) {
        const OwaMoments m = owa_moments(chain.weights, stats);
        mixture.components.push_back({weight, m.mean, m.variance});
      },
      max_attributes);
  return mixture;
}

namespace {

void require_positive_variance(const MixtureComponent& c) {
  if (!(c.variance > 0.0)) {
    throw std::domain_error(
        "mixture component has variance " + std::to_string(c.variance) +
        "; the normal approximation is degenerate, use the exact or Monte Carlo path");
  }
}

}  // namespace

double mixture_pdf(const MixtureApprox& mixture, double y) {
  double sum = 0.0;
  for (const auto& c : mixture.components) {
    require_positive_variance(c);
    const double sd = std::sqrt(c.variance);
    sum += c.weight * normal_pdf((y - c.mean) / sd) / sd;
  }
  return sum;
}

double mixture_cdf(const MixtureApprox& mixture, double y) {
  double sum = 0.0;
  for (const auto& c : mixture.components) {
    require_positive_variance(c);
    sum += c.weight * normal_cdf((y - c.mean) / std::sqrt(c.variance));
  }
  return sum;
}

std::vector<double> power_weights(std::size_t n, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ValidationError("power weight exponent must be > 0");
  if (n == 0) throw ValidationError("power weights need n >= 1");
  std::vector<double> p(n);
  const double nn = static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) p[i - 1] = std::pow((nn - i + 1) / nn, a) / nn;
  return p;
}

SetFunction power_weight_game(std::size_t n, double a) {
  if (n > kMaxStoredAttributes) {
    throw LimitError("n = " + std::to_string(n) + " exceeds the storable maximum " +
                     std::to_string(kMaxStoredAttributes));
  }
  const auto p = power_weights(n, a);
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t j = 1; j <= n; ++j) cumulative[j] = cumulative[j - 1] + p[j - 1];
  std::vector<double> values(std::size_t{1} << n);
  for (std::size_t m = 0; m < values.size(); ++m) {
    values[m] = cumulative[std::popcount(static_cast<Mask>(m))];
  }
  return SetFunction(n, std::move(values));
}

StiglerSummary stigler_summary(double a, std::size_t n, Law law, DjOrder order) {
  const auto weights = power_weights(n, a);
  const auto stats = make_order_statistics(law, n, order);
  const auto model = make_quantile_model(law);
  const auto J = WeightFunction::power(a);
  const OwaMoments m = owa_moments(weights, *stats);
  return {alpha(J, *model), beta2(J, *model), m.mean, static_cast<double>(n) * m.variance};
}

}  // namespace choquet
