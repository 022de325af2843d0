#include "choquet/exponential_distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "choquet/combinatorics.hpp"
#include "choquet/errors.hpp"
#include "choquet/order_statistics.hpp"

namespace choquet {

namespace {

bool slopes_too_close(double a, double b) {
  return std::abs(a - b) <= kSlopeDistinctTolerance * std::max(std::abs(a), std::abs(b));
}

std::string describe_sigma(const std::vector<std::size_t>& sigma) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < sigma.size(); ++i) out << (i ? "," : "") << sigma[i];
  out << ')';
  return out.str();
}

// Throws if the chain is irregular, naming sigma and the offending indices.
void require_regular(const ExpChainCoeffs& coeffs) {
  const auto& c = coeffs.c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(c[i] > 0.0)) {
      std::ostringstream msg;
      msg << "exponential density needs positive slopes nu_i/i; sigma = "
          << describe_sigma(coeffs.sigma) << " has nu_" << i + 1 << "/" << i + 1 << " = " << c[i]
          << " (use the Monte Carlo path for this game)";
      throw RegularityError(msg.str());
    }
    for (std::size_t k = i + 1; k < c.size(); ++k) {
      if (slopes_too_close(c[i], c[k])) {
        std::ostringstream msg;
        msg << "exponential density needs distinct slopes nu_i/i; sigma = "
            << describe_sigma(coeffs.sigma) << " has equal slopes at indices (" << i + 1 << ","
            << k + 1 << ") = " << c[i] << " (perturb nu or use the Monte Carlo path)";
        throw RegularityError(msg.str());
      }
    }
  }
}

}  // namespace

ExpChainCoeffs exp_chain_coeffs(const Chain& chain) {
  ExpChainCoeffs out;
  out.sigma = chain.sigma;
  const std::size_t n = chain.weights.size();
  out.c.resize(n);
  for (std::size_t i = 1; i <= n; ++i) out.c[i - 1] = chain.nu_chain[i] / static_cast<double>(i);
  try {
    require_regular(out);
  } catch (const RegularityError&) {
    out.regular = false;
  }
  return out;
}

std::vector<ExpChainCoeffs> exp_chain_table(const SetFunction& game,
                                            std::size_t max_attributes) {
  std::vector<ExpChainCoeffs> table;
  for_each_chain(
      game, [&](const Chain& c) { table.push_back(exp_chain_coeffs(c)); }, max_attributes);
  return table;
}

ExponentialChoquetDist::ExponentialChoquetDist(const SetFunction& game,
                                               std::size_t max_attributes) {
  const std::size_t n = game.size();
  const std::size_t subsets = std::size_t{game.full_mask()} + 1;
  // weights alternate in sign and cancel near y = 0
  std::vector<long double> pdf_by_subset(subsets, 0.0L);
  std::vector<long double> cdf_by_subset(subsets, 0.0L);
  std::vector<Mask> chain_masks(n + 1);

  for_each_chain(
      game,
      [&](const Chain& chain) {
        const ExpChainCoeffs coeffs = exp_chain_coeffs(chain);
        if (!coeffs.regular) require_regular(coeffs);
        const auto& c = coeffs.c;
        Mask set = 0;
        for (std::size_t i = 0; i < n; ++i) {
          set |= Mask{1} << (chain.sigma[i] - 1);
          long double denom = 1.0L;
          for (std::size_t k = 0; k < n; ++k) {
            if (k != i) denom *= static_cast<long double>(c[i]) - c[k];
          }
          const long double lead =
              std::pow(static_cast<long double>(c[i]), static_cast<long double>(n) - 2.0L) / denom;
          pdf_by_subset[set] += lead;
          cdf_by_subset[set] += lead * c[i];
        }
      },
      max_attributes);

  const long double scale = 1.0L / factorial(n);
  for (Mask m = 1; m < subsets; ++m) {
    if (pdf_by_subset[m] == 0.0L && cdf_by_subset[m] == 0.0L) continue;
    const double slope = game[m] / static_cast<double>(std::popcount(m));
    slopes_.push_back(slope);
    pdf_weights_.push_back(pdf_by_subset[m] * scale);
    cdf_weights_.push_back(cdf_by_subset[m] * scale);
    max_slope_ = std::max(max_slope_, slope);
  }
}

double ExponentialChoquetDist::pdf(double y) const {
  if (y < 0.0) return 0.0;
  long double sum = 0.0L;
  for (std::size_t t = 0; t < slopes_.size(); ++t) {
    sum += pdf_weights_[t] * std::exp(-static_cast<long double>(y) / slopes_[t]);
  }
  return static_cast<double>(sum);
}

double ExponentialChoquetDist::cdf(double y) const {
  if (y <= 0.0) return 0.0;
  // Each term integrates to c^{n-1} (1 - exp(-y/c)) / prod(c - c_k); the
  // constant parts sum to one.
  long double sum = 0.0L;
  for (std::size_t t = 0; t < slopes_.size(); ++t) {
    sum -= cdf_weights_[t] * std::expm1(-static_cast<long double>(y) / slopes_[t]);
  }
  return std::clamp(static_cast<double>(sum), 0.0, 1.0);
}

double exp_pdf(const SetFunction& game, double y) { return ExponentialChoquetDist(game).pdf(y); }

double exp_cdf(const SetFunction& game, double y) { return ExponentialChoquetDist(game).cdf(y); }

MomentReport exp_moments(const SetFunction& game) {
  const ExponentialOrderStatistics stats(game.size());
  return moments_report(game, stats);
}

}  // namespace choquet
