#include "choquet/order_statistics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "choquet/errors.hpp"

namespace choquet {

namespace {

void require_ranks(std::size_t i, std::size_t j, std::size_t n) {
  if (n == 0 || i == 0 || j < i || j > n) {
    throw std::out_of_range("order statistic ranks (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") invalid for n = " + std::to_string(n));
  }
}

std::size_t order_value(DjOrder order) { return static_cast<std::size_t>(order); }

QuantileJet checked_jet(const QuantileModel& model, double u) {
  const QuantileJet jet = model.jet(u);
  for (double v : jet) {
    if (!std::isfinite(v)) {
      throw std::domain_error("quantile derivatives of " + std::string(model.name()) +
                              " are not finite at u = " + std::to_string(u));
    }
  }
  return jet;
}

// Coefficients of E[X_{i:n}] in powers of h = 1/(n + 2), p = i/(n + 1).
std::array<double, 4> mean_series(const QuantileJet& g, double p) {
  const double q = 1.0 - p;
  const double pq = p * q;
  const double d = q - p;
  return {
      g[0],
      pq * g[2] / 2.0,
      pq * (d * g[3] / 3.0 + pq * g[4] / 8.0),
      pq * (-d * g[3] / 3.0 + (d * d - pq) * g[4] / 4.0 + pq * d * g[5] / 6.0 +
            pq * pq * g[6] / 48.0),
  };
}

// Coefficients of Cov(X_{i:n}, X_{j:n}), i <= j, in powers of h.
std::array<double, 4> covariance_series(const QuantileJet& a, double p1, const QuantileJet& b,
                                        double p2) {
  const double q1 = 1.0 - p1;
  const double q2 = 1.0 - p2;
  const double d1 = q1 - p1;
  const double d2 = q2 - p2;
  const double lead = p1 * q2;
  const double c1 = lead * a[1] * b[1];
  const double c2 =
      lead * (d1 * a[2] * b[1] + d2 * a[1] * b[2] + 0.5 * p1 * q1 * a[3] * b[1] +
              0.5 * p2 * q2 * a[1] * b[3] + 0.5 * p1 * q2 * a[2] * b[2]);
  const double c3 =
      lead *
      (-d1 * a[2] * b[1] - d2 * a[1] * b[2] + (d1 * d1 - p1 * q1) * a[3] * b[1] +
       (d2 * d2 - p2 * q2) * a[1] * b[3] +
       (1.5 * d1 * d2 + 0.5 * p2 * q1 - 2.0 * p1 * q2) * a[2] * b[2] +
       5.0 / 6.0 * p1 * q1 * d1 * a[4] * b[1] + 5.0 / 6.0 * p2 * q2 * d2 * a[1] * b[4] +
       (p1 * q2 * d1 + 0.5 * p1 * q1 * d2) * a[3] * b[2] +
       (p1 * q2 * d2 + 0.5 * p2 * q2 * d1) * a[2] * b[3] +
       p1 * p1 * q1 * q1 * a[5] * b[1] / 8.0 + p2 * p2 * q2 * q2 * a[1] * b[5] / 8.0 +
       p1 * p1 * q1 * q2 * a[4] * b[2] / 4.0 + p1 * p2 * q2 * q2 * a[2] * b[4] / 4.0 +
       (2.0 * p1 * p1 * q2 * q2 + 3.0 * p1 * p2 * q1 * q2) * a[3] * b[3] / 12.0);
  return {0.0, c1, c2, c3};
}

}  // namespace

DjOrder parse_dj_order(int order) {
  if (order == 2) return DjOrder::second;
  if (order == 3) return DjOrder::third;
  throw ValidationError("David-Johnson order must be 2 or 3, got " + std::to_string(order));
}

OrderStatisticMoments::OrderStatisticMoments(std::size_t n)
    : n_(n), means_(n, 0.0), products_(n * n, 0.0) {
  if (n == 0) throw std::out_of_range("sample size must be positive");
}

double OrderStatisticMoments::mean(std::size_t i) const {
  require_ranks(i, i, n_);
  return means_[i - 1];
}

double OrderStatisticMoments::product(std::size_t i, std::size_t j) const {
  if (j < i) std::swap(i, j);
  require_ranks(i, j, n_);
  return products_[(i - 1) * n_ + (j - 1)];
}

void OrderStatisticMoments::set(std::size_t i, double mean) { means_[i - 1] = mean; }

void OrderStatisticMoments::set(std::size_t i, std::size_t j, double product) {
  products_[(i - 1) * n_ + (j - 1)] = product;
}

UniformOrderStatistics::UniformOrderStatistics(std::size_t n) : OrderStatisticMoments(n) {
  for (std::size_t i = 1; i <= n; ++i) {
    set(i, uniform_mean(i, n));
    for (std::size_t j = i; j <= n; ++j) set(i, j, uniform_product(i, j, n));
  }
}

ExponentialOrderStatistics::ExponentialOrderStatistics(std::size_t n)
    : OrderStatisticMoments(n) {
  for (std::size_t i = 1; i <= n; ++i) {
    set(i, exp_mean(i, n));
    for (std::size_t j = i; j <= n; ++j) set(i, j, exp_product(i, j, n));
  }
}

DavidJohnsonOrderStatistics::DavidJohnsonOrderStatistics(
    std::shared_ptr<const QuantileModel> model, std::size_t n, DjOrder order)
    : OrderStatisticMoments(n), model_(std::move(model)), order_(order) {
  if (!model_) throw std::invalid_argument("quantile model is null");
  for (std::size_t i = 1; i <= n; ++i) {
    set(i, dj_mean(*model_, i, n, order));
    for (std::size_t j = i; j <= n; ++j) set(i, j, dj_product(*model_, i, j, n, order));
  }
}

std::unique_ptr<OrderStatisticMoments> make_order_statistics(Law law, std::size_t n,
                                                             DjOrder order) {
  switch (law) {
    case Law::uniform: return std::make_unique<UniformOrderStatistics>(n);
    case Law::exponential: return std::make_unique<ExponentialOrderStatistics>(n);
    case Law::normal:
      return std::make_unique<DavidJohnsonOrderStatistics>(normal_quantile_model(), n, order);
  }
  throw std::invalid_argument("unknown law");
}

double uniform_mean(std::size_t i, std::size_t n) {
  require_ranks(i, i, n);
  return static_cast<double>(i) / static_cast<double>(n + 1);
}

double uniform_product(std::size_t i, std::size_t j, std::size_t n) {
  if (j < i) std::swap(i, j);
  require_ranks(i, j, n);
  return static_cast<double>(i) * static_cast<double>(j + 1) /
         (static_cast<double>(n + 1) * static_cast<double>(n + 2));
}

double uniform_product_moment(std::span<const std::size_t> ranks,
                              std::span<const unsigned> powers, std::size_t n) {
  if (ranks.size() != powers.size()) throw std::invalid_argument("ranks/powers size mismatch");
  // n! / (n + M)! * prod_k (i_k + M_k - 1)! / (i_k + M_{k-1} - 1)!, M_k partial sums
  double result = 1.0;
  unsigned partial = 0;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    require_ranks(ranks[k], ranks[k], n);
    if (k > 0 && ranks[k] <= ranks[k - 1]) {
      throw std::invalid_argument("ranks must be strictly increasing");
    }
    for (unsigned t = partial; t < partial + powers[k]; ++t) {
      result *= static_cast<double>(ranks[k] + t);
    }
    partial += powers[k];
  }
  for (unsigned t = 1; t <= partial; ++t) result /= static_cast<double>(n + t);
  return result;
}

double exp_mean(std::size_t i, std::size_t n) {
  require_ranks(i, i, n);
  double sum = 0.0;
  for (std::size_t k = n - i + 1; k <= n; ++k) sum += 1.0 / static_cast<double>(k);
  return sum;
}

double exp_covariance(std::size_t i, std::size_t j, std::size_t n) {
  if (j < i) std::swap(i, j);
  require_ranks(i, j, n);
  double sum = 0.0;
  for (std::size_t k = n - i + 1; k <= n; ++k) {
    sum += 1.0 / (static_cast<double>(k) * static_cast<double>(k));
  }
  return sum;
}

double exp_product(std::size_t i, std::size_t j, std::size_t n) {
  return exp_covariance(i, j, n) + exp_mean(i, n) * exp_mean(j, n);
}

double dj_mean(const QuantileModel& model, std::size_t i, std::size_t n, DjOrder order) {
  require_ranks(i, i, n);
  const double p = static_cast<double>(i) / static_cast<double>(n + 1);
  const double h = 1.0 / static_cast<double>(n + 2);
  const auto c = mean_series(checked_jet(model, p), p);
  double sum = 0.0;
  double hk = 1.0;
  for (std::size_t k = 0; k <= order_value(order); ++k, hk *= h) sum += c[k] * hk;
  return sum;
}

double dj_product(const QuantileModel& model, std::size_t i, std::size_t j, std::size_t n,
                  DjOrder order) {
  if (j < i) std::swap(i, j);
  require_ranks(i, j, n);
  const double p1 = static_cast<double>(i) / static_cast<double>(n + 1);
  const double p2 = static_cast<double>(j) / static_cast<double>(n + 1);
  const double h = 1.0 / static_cast<double>(n + 2);
  const QuantileJet a = checked_jet(model, p1);
  const QuantileJet b = i == j ? a : checked_jet(model, p2);
  const auto ma = mean_series(a, p1);
  const auto mb = mean_series(b, p2);
  const auto cov = covariance_series(a, p1, b, p2);
  const std::size_t top = order_value(order);

  // Covariance plus the product of the two mean series, both truncated at h^top.
  double sum = 0.0;
  for (std::size_t k = 0; k <= top; ++k) {
    double coeff = cov[k];
    for (std::size_t x = 0; x <= k; ++x) coeff += ma[x] * mb[k - x];
    sum += coeff * std::pow(h, static_cast<double>(k));
  }
  return sum;
}

}  // namespace choquet
