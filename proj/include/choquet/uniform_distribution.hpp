#pragma once

// Exact law of Y = C_nu(U_1..U_n) for i.i.d. standard uniform inputs.
//
//   F(y) = (1/n!)     sum_sigma Delta[(. - y)_-^n     : chain(sigma)]
//   f(y) = (1/(n-1)!) sum_sigma Delta[(. - y)_+^{n-1} : chain(sigma)]
//
// where chain(sigma) = (nu_0^sigma, ..., nu_n^sigma).

#include <cstddef>
#include <functional>
#include <vector>

#include "choquet/capacity.hpp"

namespace choquet {

inline constexpr unsigned kDefaultMaxMomentOrder = 6;
inline constexpr double kMaxMomentTerms = 1e8;

class UniformChoquetDist {
 public:
  explicit UniformChoquetDist(SetFunction game,
                              std::size_t max_attributes = kDefaultMaxAttributes);

  const SetFunction& game() const noexcept { return game_; }

  double cdf(double y) const;
  /// The chain sum before clamping to [0, 1].
  double cdf_unclamped(double y) const;
  double pdf(double y) const;

  /// E[Y^r] as the sum over nested chains T_1 <= ... <= T_r <= N of
  /// prod_i nu(T_i) / C(|T_{i+1}|, |T_i|), divided by C(n + r, r).
  double raw_moment(unsigned r, unsigned max_order = kDefaultMaxMomentOrder) const;

  /// sum_sigma Delta[g : chain(sigma)], which equals E[g^{(n)}(Y)]. Every
  /// chain must have pairwise distinct values.
  double expect_gn(const std::function<double(double)>& g) const;

  /// Sorted distinct chain values; the pdf is a polynomial between them.
  std::vector<double> breakpoints() const;
  double support_min() const;
  double support_max() const;

 private:
  SetFunction game_;
  std::size_t max_attributes_;
  double n_factorial_;
};

/// E[Y] = 1/(n+1) sum_T nu(T) / C(n, |T|).
double uniform_mean_closed_form(const SetFunction& game);
/// E[Y^2] = 2/((n+1)(n+2)) sum_{T1 <= T2} nu(T1) nu(T2) / (C(|T2|,|T1|) C(n,|T2|)).
double uniform_second_moment_closed_form(const SetFunction& game);

}  // namespace choquet
