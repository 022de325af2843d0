#include "choquet/quantile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace choquet {

namespace {

void require_open_unit(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("quantile argument " + std::to_string(u) + " is outside (0, 1)");
  }
}

// Value and derivatives at u = 1 - t: G^{(k)}(u) = (k - 1)! / t^k.
QuantileJet exponential_jet(double t) {
  const double inv = 1.0 / t;
  QuantileJet out{};
  out[0] = -std::log(t);
  double power = inv;
  double fact = 1.0;
  for (std::size_t k = 1; k <= 6; ++k) {
    out[k] = fact * power;
    power *= inv;
    fact *= static_cast<double>(k);
  }
  return out;
}

// Acklam's rational approximation for p <= 0.5, relative error about 1e-9.
double acklam_lower(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double refined_lower(double p) {
  double x = acklam_lower(p);
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  const double step = u / (1.0 + 0.5 * x * u);
  if (std::isfinite(step)) x -= step;
  return x;
}

}  // namespace

double QuantileModel::derivative(int order, double u) const {
  if (order < 0 || order > 6) throw std::out_of_range("quantile derivative order must be 0..6");
  return jet(u)[static_cast<std::size_t>(order)];
}

double QuantileModel::derivative_complement(int order, double t) const {
  if (order < 0 || order > 6) throw std::out_of_range("quantile derivative order must be 0..6");
  return jet_complement(t)[static_cast<std::size_t>(order)];
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double inverse_normal_cdf(double p) {
  require_open_unit(p);
  // 1 - p is exact for p >= 0.5, so the upper half reuses the lower tail.
  return p <= 0.5 ? refined_lower(p) : -refined_lower(1.0 - p);
}

double UniformQuantile::quantile(double u) const {
  require_open_unit(u);
  return u;
}

QuantileJet UniformQuantile::jet(double u) const {
  require_open_unit(u);
  return {u, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
}

double UniformQuantile::quantile_complement(double t) const {
  require_open_unit(t);
  return 1.0 - t;
}

QuantileJet UniformQuantile::jet_complement(double t) const {
  require_open_unit(t);
  return {1.0 - t, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
}

double ExponentialQuantile::quantile(double u) const {
  require_open_unit(u);
  return -std::log1p(-u);
}

QuantileJet ExponentialQuantile::jet(double u) const {
  require_open_unit(u);
  return exponential_jet(1.0 - u);
}

double ExponentialQuantile::quantile_complement(double t) const {
  require_open_unit(t);
  return -std::log(t);
}

QuantileJet ExponentialQuantile::jet_complement(double t) const {
  require_open_unit(t);
  return exponential_jet(t);
}

double NormalQuantile::quantile(double u) const { return inverse_normal_cdf(u); }

QuantileJet NormalQuantile::jet(double u) const {
  const double g = inverse_normal_cdf(u);
  const double g2 = g * g;
  const double inv_f = 1.0 / normal_pdf(g);
  QuantileJet out{};
  out[0] = g;
  out[1] = inv_f;
  out[2] = g * std::pow(inv_f, 2);
  out[3] = (1.0 + 2.0 * g2) * std::pow(inv_f, 3);
  out[4] = g * (7.0 + 6.0 * g2) * std::pow(inv_f, 4);
  out[5] = (7.0 + g2 * (46.0 + 24.0 * g2)) * std::pow(inv_f, 5);
  out[6] = g * (127.0 + 326.0 * g2 + 120.0 * g2 * g2) * std::pow(inv_f, 6);
  return out;
}

double NormalQuantile::quantile_complement(double t) const { return -inverse_normal_cdf(t); }

QuantileJet NormalQuantile::jet_complement(double t) const {
  // G(1 - t) = -G(t), so G^{(k)}(1 - t) = (-1)^{k+1} G^{(k)}(t).
  QuantileJet out = jet(t);
  for (std::size_t k = 0; k < out.size(); k += 2) out[k] = -out[k];
  return out;
}

std::shared_ptr<const QuantileModel> normal_quantile_model() {
  return std::make_shared<NormalQuantile>();
}

std::shared_ptr<const QuantileModel> make_quantile_model(Law law) {
  switch (law) {
    case Law::uniform: return std::make_shared<UniformQuantile>();
    case Law::exponential: return std::make_shared<ExponentialQuantile>();
    case Law::normal: return std::make_shared<NormalQuantile>();
  }
  throw std::invalid_argument("unknown law");
}

}  // namespace choquet
