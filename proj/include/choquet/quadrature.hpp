#pragma once

// Adaptive quadrature used by the asymptotic functionals and by the
// normalization checks. Backed by Boost.Math.

#include <functional>
#include <span>
#include <stdexcept>

namespace choquet {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod on [a, b]. Intended for smooth integrands.
double integrate(const Integrand& f, double a, double b, double rel_tol = 1e-12);

/// Splits [a, b] at the given interior points (unsorted, duplicates and
/// points outside [a, b] ignored) and integrates each piece.
double integrate_piecewise(const Integrand& f, double a, double b,
                           std::span<const double> breakpoints, double rel_tol = 1e-12);

/// Tanh-sinh on [a, b]; never evaluates f at the endpoints, so integrable
/// endpoint singularities are fine.
double integrate_singular(const Integrand& f, double a, double b, double rel_tol = 1e-10);

}  // namespace choquet
