#pragma once

// Divided differences of truncated power functions.
//
// Knot vectors hold n + 1 real knots in any order; repeats are allowed on the
// recurrence paths. The recurrence splits the knots at y into b (knots < y)
// and c (knots >= y) and fills the table
//
//   alpha[k][l] = ((c_l - y) alpha[k-1][l] + (y - b_k) alpha[k][l-1]) / (c_l - b_k)
//
// row by row in a single array of length |c| + 1. Since c_l - b_k > 0 the
// division is always safe and every step is a convex combination.

#include <functional>
#include <span>
#include <vector>

namespace choquet {

using KnotSpan = std::span<const double>;

inline constexpr double kDistinctKnotGap = 1e-10;

enum class TruncatedSide { plus, minus };

struct PartitionedKnots {
  std::vector<double> below;         // b: knots < y
  std::vector<double> at_or_above;   // c: knots >= y
};

PartitionedKnots partition_knots(KnotSpan knots, double y);

/// Delta[(. - y)_+^{n-1} : a_0..a_n]. Zero when y is outside the knot hull.
double tp_plus_dd(KnotSpan knots, double y);

/// Delta[(. - y)_-^{n} : a_0..a_n]. One when y exceeds every knot, zero when
/// every knot is >= y.
double tp_minus_dd(KnotSpan knots, double y);

/// Delta[(. - y)_+^{n} : a_0..a_n], the complement of tp_minus_dd.
double tp_plus_dd_top(KnotSpan knots, double y);

/// Rational formula sum_i g(a_i) / prod_{j != i} (a_i - a_j) for
/// g = (. - y)_{side}^{degree}. Throws RepeatedKnotError when two knots are
/// within kDistinctKnotGap.
double tp_dd_distinct(KnotSpan knots, double y, TruncatedSide side, int degree);

/// B-spline M(t | a_0..a_n) = n Delta[(. - t)_+^{n-1} : a_0..a_n].
double bspline(KnotSpan knots, double t);

/// Divided difference of an arbitrary function over distinct knots.
double dd_generic(const std::function<double(double)>& f, KnotSpan knots);

}  // namespace choquet
