#pragma once

// Large-n normal approximation of Y for L-statistic weights. Given a weight
// function J on (0, 1) and a quantile function G,
//
//   alpha(J, G) = int_0^1 J(u) G(u) du
//   beta2(J, G) = 2 int int_{0<u<v<1} J(u) J(v) u (1 - v) G'(u) G'(v) du dv
//
// and the law of Y is approximated by a mixture of n! normals, one per chain.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/law.hpp"
#include "choquet/order_statistics.hpp"
#include "choquet/quantile.hpp"

namespace choquet {

class WeightFunction {
 public:
  /// Step function with J(u) = n p_{n-i+1} on ((i-1)/n, i/n].
  static WeightFunction from_weights(std::vector<double> weights);
  static WeightFunction from_chain(const Chain& chain);
  /// J(u) = u^a.
  static WeightFunction power(double a);

  double operator()(double u) const { return eval_(u); }
  /// Points in (0, 1) where J may jump.
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

 private:
  WeightFunction(std::function<double(double)> eval, std::vector<double> breakpoints);

  std::function<double(double)> eval_;
  std::vector<double> breakpoints_;
};

double alpha(const WeightFunction& J, const QuantileModel& qm);
double beta2(const WeightFunction& J, const QuantileModel& qm);

/// Mean and variance of sum_i weights[i-1] X_{n-i+1:n}.
struct OwaMoments {
  double mean = 0.0;
  double variance = 0.0;
};

OwaMoments owa_moments(std::span<const double> weights, const OrderStatisticMoments& stats);

struct MixtureComponent {
  double weight = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

struct MixtureApprox {
  std::vector<MixtureComponent> components;
};

MixtureApprox mixture_approx(const SetFunction& game, const OrderStatisticMoments& stats,
                             std::size_t max_attributes = kDefaultMaxAttributes);

/// Throw std::domain_error on a component with nonpositive variance.
double mixture_pdf(const MixtureApprox& mixture, double y);
double mixture_cdf(const MixtureApprox& mixture, double y);

/// OWA weights p_i = (1/n) ((n - i + 1)/n)^a.
std::vector<double> power_weights(std::size_t n, double a);
/// Symmetric game nu(S) = sum_{j <= |S|} p_j with the weights above.
SetFunction power_weight_game(std::size_t n, double a);

struct StiglerSummary {
  double alpha = 0.0;
  double beta2 = 0.0;
  double component_mean = 0.0;
  double n_times_variance = 0.0;
};

/// Limits for J(u) = u^a next to the exact (or series) OWA moments at size n.
StiglerSummary stigler_summary(double a, std::size_t n, Law law,
                               DjOrder order = DjOrder::second);

}  // namespace choquet
