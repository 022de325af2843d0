#pragma once

// First and second moments of order statistics X_{1:n} <= ... <= X_{n:n}.
// Ranks are 1-based throughout.

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "choquet/law.hpp"
#include "choquet/quantile.hpp"

namespace choquet {

/// Truncation order of the David-Johnson series, in powers of 1/(n + 2).
enum class DjOrder { second = 2, third = 3 };

DjOrder parse_dj_order(int order);

/// Supplies E[X_{i:n}] and E[X_{i:n} X_{j:n}] for one law and sample size.
class OrderStatisticMoments {
 public:
  virtual ~OrderStatisticMoments() = default;

  virtual std::string_view law_name() const = 0;
  virtual bool is_exact() const = 0;

  std::size_t sample_size() const noexcept { return n_; }
  double mean(std::size_t i) const;
  /// Symmetric in (i, j).
  double product(std::size_t i, std::size_t j) const;

 protected:
  explicit OrderStatisticMoments(std::size_t n);
  /// Fills the tables; products only for i <= j.
  void set(std::size_t i, double mean);
  void set(std::size_t i, std::size_t j, double product);

 private:
  std::size_t n_;
  std::vector<double> means_;
  std::vector<double> products_;  // n x n, upper triangle used
};

class UniformOrderStatistics final : public OrderStatisticMoments {
 public:
  explicit UniformOrderStatistics(std::size_t n);
  std::string_view law_name() const override { return "uniform"; }
  bool is_exact() const override { return true; }
};

class ExponentialOrderStatistics final : public OrderStatisticMoments {
 public:
  explicit ExponentialOrderStatistics(std::size_t n);
  std::string_view law_name() const override { return "exponential"; }
  bool is_exact() const override { return true; }
};

/// Approximate moments from the David-Johnson expansion of G(U_{i:n}) around
/// i / (n + 1).
class DavidJohnsonOrderStatistics final : public OrderStatisticMoments {
 public:
  DavidJohnsonOrderStatistics(std::shared_ptr<const QuantileModel> model, std::size_t n,
                              DjOrder order = DjOrder::second);
  std::string_view law_name() const override { return model_->name(); }
  bool is_exact() const override { return false; }
  DjOrder order() const noexcept { return order_; }

 private:
  std::shared_ptr<const QuantileModel> model_;
  DjOrder order_;
};

/// Exact providers for uniform and exponential, David-Johnson for normal.
std::unique_ptr<OrderStatisticMoments> make_order_statistics(Law law, std::size_t n,
                                                             DjOrder order = DjOrder::second);

// Uniform order statistics.
double uniform_mean(std::size_t i, std::size_t n);
/// E[U_{i:n} U_{j:n}] = i (j + 1) / ((n + 1)(n + 2)) for i <= j.
double uniform_product(std::size_t i, std::size_t j, std::size_t n);
/// E[prod_k U_{ranks[k]:n}^{powers[k]}] for strictly increasing ranks.
double uniform_product_moment(std::span<const std::size_t> ranks,
                              std::span<const unsigned> powers, std::size_t n);

// Standard exponential order statistics.
double exp_mean(std::size_t i, std::size_t n);
double exp_covariance(std::size_t i, std::size_t j, std::size_t n);
double exp_product(std::size_t i, std::size_t j, std::size_t n);

// David-Johnson series.
double dj_mean(const QuantileModel& model, std::size_t i, std::size_t n, DjOrder order);
double dj_product(const QuantileModel& model, std::size_t i, std::size_t j, std::size_t n,
                  DjOrder order);

}  // namespace choquet
