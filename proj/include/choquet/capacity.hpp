#pragma once

// Games and capacities on N = {1..n}, the discrete Choquet integral and the
// permutation chains it decomposes into.
//
// Subsets are bitmasks: attribute i (1-based) is bit (i - 1).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace choquet {

using Mask = std::uint32_t;

/// Default bound on n for anything that enumerates the n! permutations.
inline constexpr std::size_t kDefaultMaxAttributes = 10;
/// Hard bound on n for storing a set function (2^n doubles).
inline constexpr std::size_t kMaxStoredAttributes = 24;

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kMonotonicitySlack = 1e-12;

/// Bitmask of a list of 1-based attribute indices.
Mask mask_of(std::initializer_list<std::size_t> attributes);
Mask mask_of(std::span<const std::size_t> attributes);
/// 1-based attribute indices of a mask, ascending.
std::vector<std::size_t> attributes_of(Mask mask);

/// A game: real values on all subsets of N with value 0 on the empty set.
/// Immutable after construction.
class SetFunction {
 public:
  SetFunction(std::size_t n, std::vector<double> values);

  std::size_t size() const noexcept { return n_; }
  Mask full_mask() const noexcept { return static_cast<Mask>((std::size_t{1} << n_) - 1); }
  double operator[](Mask subset) const { return values_[subset]; }
  double total() const noexcept { return values_.back(); }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Builds a game from per-subset values. Every nonempty subset must be
/// present; the empty set may be given only with value 0.
SetFunction make_game(std::size_t n, const std::map<Mask, double>& values,
                      std::size_t max_attributes = kDefaultMaxAttributes);

struct CapacityCheck {
  bool is_monotone = true;
  bool is_normalized = true;
  /// First covering pair (S, S + {i}) found with nu(S) > nu(S + {i}).
  std::optional<std::pair<Mask, Mask>> violating_pair;

  bool is_capacity() const noexcept { return is_monotone && is_normalized; }
};

CapacityCheck check_capacity(const SetFunction& game);

/// True when nu(T) depends only on |T| (within tol).
bool is_symmetric(const SetFunction& game, double tol = 0.0);

/// Values of the game along the maximal chain induced by a permutation.
struct Chain {
  std::vector<std::size_t> sigma;  // 1-based
  std::vector<double> nu_chain;    // n + 1 entries, nu_chain[0] = 0
  std::vector<double> weights;     // weights[i-1] = nu_chain[i] - nu_chain[i-1]
};

/// sigma is a 1-based permutation of {1..n}.
Chain chain_for(const SetFunction& game, std::span<const std::size_t> sigma);

/// Visits all n! chains in lexicographic order of sigma. The Chain passed to
/// the visitor is reused between calls.
void for_each_chain(const SetFunction& game, const std::function<void(const Chain&)>& visit,
                    std::size_t max_attributes = kDefaultMaxAttributes);

std::vector<Chain> enumerate_chains(const SetFunction& game,
                                    std::size_t max_attributes = kDefaultMaxAttributes);

/// Choquet integral of x, ordering coordinates by a stable descending sort.
double choquet(const SetFunction& game, std::span<const double> x);

/// Degree of orness: ((n + 1) E[Y] - 1) / (n - 1) with E[Y] the mean of the
/// integral over i.i.d. standard uniform inputs. Requires a capacity, n >= 2.
double orness(const SetFunction& game);

}  // namespace choquet
