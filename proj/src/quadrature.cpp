#include "choquet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace choquet {

namespace {

constexpr unsigned kMaxDepth = 15;

void check_converged(double error, double l1, double rel_tol, const char* method) {
  // Boost reports the error estimate; allow some slack over the requested
  // relative tolerance before declaring failure.
  const double scale = std::max(l1, std::numeric_limits<double>::min());
  if (!std::isfinite(error) || error > 100.0 * rel_tol * scale + 1e-14) {
    std::ostringstream msg;
    msg << method << " quadrature did not converge (error estimate " << error << ", L1 " << l1
        << ")";
    throw QuadratureError(msg.str());
  }
}

// Nodes next to an endpoint can round onto it on short intervals; keep them
// strictly inside so integrands defined on the open interval stay valid.
auto open_interval(const Integrand& f, double a, double b) {
  const double lo = std::min(std::nextafter(a, b), b);
  const double hi = std::max(std::nextafter(b, a), a);
  return [&f, lo, hi](double x) { return f(std::clamp(x, std::min(lo, hi), std::max(lo, hi))); };
}

}  // namespace

double integrate(const Integrand& f, double a, double b, double rel_tol) {
  if (a == b) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      open_interval(f, a, b), a, b, kMaxDepth, rel_tol, &error, &l1);
  check_converged(error, l1, rel_tol, "Gauss-Kronrod");
  return value;
}

double integrate_piecewise(const Integrand& f, double a, double b,
                           std::span<const double> breakpoints, double rel_tol) {
  std::vector<double> points{a, b};
  for (double p : breakpoints) {
    if (p > a && p < b) points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // One error budget for the whole range, shared out by piece width.
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  std::vector<double> rough(points.size() - 1);
  double total_l1 = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    double l1 = 0.0;
    rough[i - 1] = GK::integrate(open_interval(f, points[i - 1], points[i]), points[i - 1],
                                 points[i], 0, rel_tol, nullptr, &l1);
    total_l1 += l1;
  }
  double sum = 0.0, error = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double lo = points[i - 1], hi = points[i];
    const double target = rel_tol * total_l1 * (hi - lo) / (b - a);
    const double scale = std::abs(rough[i - 1]);
    const double tol = scale > 0.0 ? std::max(rel_tol, target / scale) : rel_tol;
    double piece_error = 0.0;
    sum += GK::integrate(open_interval(f, lo, hi), lo, hi, kMaxDepth, tol, &piece_error);
    error += piece_error;
  }
  check_converged(error, total_l1, rel_tol, "Gauss-Kronrod");
  return sum;
}

double integrate_singular(const Integrand& f, double a, double b, double rel_tol) {
  if (a == b) return 0.0;
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(open_interval(f, a, b), a, b, rel_tol, &error, &l1);
  check_converged(error, l1, rel_tol, "tanh-sinh");
  return value;
}

}  // namespace choquet
