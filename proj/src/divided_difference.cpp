#include "choquet/divided_difference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "choquet/errors.hpp"

namespace choquet {

namespace {

void require_valid(KnotSpan knots) {
  if (knots.size() < 2) throw ValidationError("a knot vector needs at least two knots");
  for (double k : knots) {
    if (!std::isfinite(k)) throw ValidationError("knots must be finite");
  }
}

// Knots shifted by -y, with the negative ones (b) first.
struct Shifted {
  std::vector<double> d;
  std::size_t r = 0;  // number of knots below y
};

Shifted shift_and_split(KnotSpan knots, double y) {
  Shifted out;
  out.d.reserve(knots.size());
  for (double k : knots) {
    if (k < y) out.d.push_back(k - y);
  }
  out.r = out.d.size();
  for (double k : knots) {
    if (k >= y) out.d.push_back(k - y);
  }
  return out;
}

// Shared loop for the two order-n variants, which differ only in the boundary
// values alpha[0][l] (l >= 1) and alpha[k][0] (k >= 1).
double order_n_recurrence(const Shifted& sh, double row_zero, double column_zero) {
  const std::size_t r = sh.r;
  const std::size_t s = sh.d.size() - r;
  const double* b = sh.d.data();
  const double* c = sh.d.data() + r;
  if (r == 0) return row_zero;
  if (s == 0) return column_zero;
  std::vector<double> a(s + 1, row_zero);
  for (std::size_t k = 0; k < r; ++k) {
    a[0] = column_zero;
    for (std::size_t l = 1; l <= s; ++l) {
      a[l] = (c[l - 1] * a[l] - b[k] * a[l - 1]) / (c[l - 1] - b[k]);
    }
  }
  return a[s];
}

double truncated_power(double x, TruncatedSide side, int degree) {
  const bool active = side == TruncatedSide::plus ? x > 0.0 : x < 0.0;
  if (!active) return 0.0;
  return degree == 0 ? 1.0 : std::pow(x, degree);
}

void require_distinct(KnotSpan knots) {
  std::vector<double> sorted(knots.begin(), knots.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] <= kDistinctKnotGap) {
      throw RepeatedKnotError("knots " + std::to_string(sorted[i - 1]) + " and " +
                              std::to_string(sorted[i]) +
                              " coincide; use the recurrence-based routines");
    }
  }
}

}  // namespace

PartitionedKnots partition_knots(KnotSpan knots, double y) {
  PartitionedKnots out;
  for (double k : knots) (k < y ? out.below : out.at_or_above).push_back(k);
  return out;
}

double tp_plus_dd(KnotSpan knots, double y) {
  require_valid(knots);
  const Shifted sh = shift_and_split(knots, y);
  const std::size_t r = sh.r;
  const std::size_t s = sh.d.size() - r;
  if (r == 0 || s == 0) return 0.0;
  const double* b = sh.d.data();
  const double* c = sh.d.data() + r;

  std::vector<double> a(s + 1, 0.0);
  a[1] = 1.0 / (c[0] - b[0]);
  for (std::size_t l = 2; l <= s; ++l) a[l] = -b[0] * a[l - 1] / (c[l - 1] - b[0]);
  for (std::size_t k = 1; k < r; ++k) {
    for (std::size_t l = 1; l <= s; ++l) {
      a[l] = (c[l - 1] * a[l] - b[k] * a[l - 1]) / (c[l - 1] - b[k]);
    }
  }
  return a[s];
}

double tp_minus_dd(KnotSpan knots, double y) {
  require_valid(knots);
  return order_n_recurrence(shift_and_split(knots, y), 0.0, 1.0);
}

double tp_plus_dd_top(KnotSpan knots, double y) {
  require_valid(knots);
  return order_n_recurrence(shift_and_split(knots, y), 1.0, 0.0);
}

double tp_dd_distinct(KnotSpan knots, double y, TruncatedSide side, int degree) {
  if (degree < 0) throw ValidationError("truncated power degree must be nonnegative");
  return dd_generic([&](double x) { return truncated_power(x - y, side, degree); }, knots);
}

double bspline(KnotSpan knots, double t) {
  return static_cast<double>(knots.size() - 1) * tp_plus_dd(knots, t);
}

double dd_generic(const std::function<double(double)>& f, KnotSpan knots) {
  require_valid(knots);
  require_distinct(knots);
  double sum = 0.0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    double denom = 1.0;
    for (std::size_t j = 0; j < knots.size(); ++j) {
      if (j != i) denom *= knots[i] - knots[j];
    }
    sum += f(knots[i]) / denom;
  }
  return sum;
}

}  // namespace choquet
