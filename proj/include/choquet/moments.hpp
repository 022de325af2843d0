#pragma once

// First two raw moments of Y = C_nu(X_1..X_n) for any law with known
// order-statistic moments, through the expected spacings
// D_k = X_{n-k+1:n} - X_{n-k:n} (X_{0:n} = 0):
//
//   E[Y]   = sum_T nu(T) / C(n,|T|) E[D_|T|]
//   E[Y^2] = sum_{T1 < T2} 2 nu(T1) nu(T2) / (C(|T2|,|T1|) C(n,|T2|)) E[D_|T1| D_|T2|]
//          + sum_T nu(T)^2 / C(n,|T|) E[D_|T|^2]

#include <cstddef>

#include "choquet/capacity.hpp"
#include "choquet/order_statistics.hpp"

namespace choquet {

class SpacingMoments {
 public:
  explicit SpacingMoments(const OrderStatisticMoments& stats);

  /// E[D_k], k = 1..n.
  double d1(std::size_t k) const;
  /// E[D_k D_l], symmetric.
  double d2(std::size_t k, std::size_t l) const;

 private:
  const OrderStatisticMoments& stats_;
  double os_mean(std::size_t i) const;
  double os_product(std::size_t i, std::size_t j) const;
};

double choquet_mean(const SetFunction& game, const OrderStatisticMoments& stats);
double second_raw_moment(const SetFunction& game, const OrderStatisticMoments& stats);

struct MomentReport {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  double sd = 0.0;
};

MomentReport moments_report(const SetFunction& game, const OrderStatisticMoments& stats);

}  // namespace choquet
