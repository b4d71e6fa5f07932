#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bootcov/rational.hpp"

namespace bootcov {

/// Finite distribution on sorted, strictly increasing support points.
/// Points may carry exact rational keys; when they do, duplicates were
/// merged by key equality and CDF queries can be made with exact arguments.
class DiscreteDist {
 public:
  /// Merge tolerance used when building from real-valued points.
  static constexpr double kMergeTol = 1e-12;

  /// Atoms given as (key, mass) in any order; equal keys are merged.
  static DiscreteDist from_keyed(std::vector<std::pair<Rational, double>> atoms);
  /// Atoms given as (value, mass); values within kMergeTol (relative to
  /// max(1,|x|)) of their sorted predecessor are merged into it.
  static DiscreteDist from_values(std::vector<std::pair<double, double>> atoms);
  static DiscreteDist point_mass(double x);

  /// Empty placeholder; every query on it is an error or returns 0.
  DiscreteDist() = default;

  std::size_t size() const { return values_.size(); }
  bool exact() const { return !keys_.empty(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& masses() const { return masses_; }
  const std::vector<double>& cumulative() const { return cumulative_; }
  const std::vector<Rational>& keys() const { return keys_; }

  /// H(x) = mass at or below x. A support point within kMergeTol of x counts
  /// as attained.
  double cdf(double x) const;
  /// H(x^-) = mass strictly below x.
  double cdf_left(double x) const;
  /// Exact-argument queries; require exact().
  double cdf(const Rational& x) const;
  double cdf_left(const Rational& x) const;

  double mean() const;

 private:
  void finish();
  // Number of support points <= x (strict=false) or < x (strict=true).
  std::size_t count_below(double x, bool strict) const;

  std::vector<double> values_;
  std::vector<double> masses_;
  std::vector<double> cumulative_;
  std::vector<Rational> keys_;
};

}  // namespace bootcov
