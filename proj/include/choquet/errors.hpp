#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

/// Malformed input: bad subset keys, missing values, wrong vector sizes.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size limit (n_max, r_max) would be exceeded.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The exponential closed-form density needs distinct, positive chain slopes.
class RegularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Repeated knots passed to a routine that needs pairwise distinct ones.
class RepeatedKnotError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace choquet
