#pragma once

// Quantile functions G = F^{-1} of the supported laws and their first six
// derivatives, which feed the David-Johnson series and the asymptotic
// functionals.

#include <array>
#include <memory>
#include <string_view>

#include "choquet/law.hpp"

namespace choquet {

/// G(u), G'(u), ..., G^{(6)}(u).
using QuantileJet = std::array<double, 7>;

class QuantileModel {
 public:
  virtual ~QuantileModel() = default;

  virtual std::string_view name() const = 0;
  virtual double quantile(double u) const = 0;
  /// Value and derivatives at u in (0, 1). Throws std::domain_error outside.
  virtual QuantileJet jet(double u) const = 0;

  /// G and its derivatives at u = 1 - t, for t in (0, 1). Laws with a right
  /// tail override this so that t near 0 keeps full precision.
  virtual double quantile_complement(double t) const { return quantile(1.0 - t); }
  virtual QuantileJet jet_complement(double t) const { return jet(1.0 - t); }

  /// Trim applied to [0, 1] when integrating against this quantile.
  virtual double integration_trim() const { return 0.0; }

  double derivative(int order, double u) const;
  double derivative_complement(int order, double t) const;
};

class UniformQuantile final : public QuantileModel {
 public:
  std::string_view name() const override { return "uniform"; }
  double quantile(double u) const override;
  QuantileJet jet(double u) const override;
  double quantile_complement(double t) const override;
  QuantileJet jet_complement(double t) const override;
};

class ExponentialQuantile final : public QuantileModel {
 public:
  std::string_view name() const override { return "exponential"; }
  double quantile(double u) const override;
  QuantileJet jet(double u) const override;
  double quantile_complement(double t) const override;
  QuantileJet jet_complement(double t) const override;
};

/// Standard normal. Derivatives use G' = 1/f(G), G'' = G/f(G)^2, ...,
/// G^{(6)} = G (127 + 326 G^2 + 96 G^4) / f(G)^6.
class NormalQuantile final : public QuantileModel {
 public:
  static constexpr double kTrim = 1e-9;

  std::string_view name() const override { return "normal"; }
  double quantile(double u) const override;
  QuantileJet jet(double u) const override;
  double quantile_complement(double t) const override;
  QuantileJet jet_complement(double t) const override;
  double integration_trim() const override { return kTrim; }
};

std::shared_ptr<const QuantileModel> normal_quantile_model();
std::shared_ptr<const QuantileModel> make_quantile_model(Law law);

double normal_pdf(double x);
double normal_cdf(double x);
/// Inverse standard normal cdf: rational initial guess refined by one Halley
/// step against erfc.
double inverse_normal_cdf(double p);

}  // namespace choquet
