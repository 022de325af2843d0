#pragma once

// Exact density of Y = C_nu(X_1..X_n) for i.i.d. standard exponential inputs.
// Along a chain the slopes c_i = nu_i^sigma / i must be positive and pairwise
// distinct; the density is then the mixture over sigma of
//
//   sum_i c_i^{n-2} / prod_{k != i} (c_i - c_k) exp(-y / c_i).

#include <cstddef>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/moments.hpp"

namespace choquet {

inline constexpr double kSlopeDistinctTolerance = 1e-9;

struct ExpChainCoeffs {
  std::vector<std::size_t> sigma;
  std::vector<double> c;  // c[i-1] = nu_i^sigma / i
  bool regular = true;
};

/// Slopes for one chain, with the regularity flag.
ExpChainCoeffs exp_chain_coeffs(const Chain& chain);

/// Checks every chain; returns the first irregular one, if any.
std::vector<ExpChainCoeffs> exp_chain_table(const SetFunction& game,
                                            std::size_t max_attributes = kDefaultMaxAttributes);

class ExponentialChoquetDist {
 public:
  /// Throws RegularityError naming the first offending permutation.
  explicit ExponentialChoquetDist(const SetFunction& game,
                                  std::size_t max_attributes = kDefaultMaxAttributes);

  double pdf(double y) const;
  double cdf(double y) const;
  /// Largest slope; the density decays like exp(-y / max_slope).
  double max_slope() const noexcept { return max_slope_; }

 private:
  // Terms sharing a slope are merged across chains: every chain through a
  // subset T contributes a term with slope nu(T) / |T|.
  std::vector<double> slopes_;
  std::vector<long double> pdf_weights_;
  std::vector<long double> cdf_weights_;
  double max_slope_ = 0.0;
};

double exp_pdf(const SetFunction& game, double y);
double exp_cdf(const SetFunction& game, double y);

/// Mean and sd from the exact exponential order-statistic moments; needs no
/// regularity.
MomentReport exp_moments(const SetFunction& game);

}  // namespace choquet
