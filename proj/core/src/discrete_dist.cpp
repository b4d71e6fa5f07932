#include "bootcov/discrete_dist.hpp"

#include <algorithm>
#include <cmath>

#include "bootcov/error.hpp"

namespace bootcov {

DiscreteDist DiscreteDist::from_keyed(std::vector<std::pair<Rational, double>> atoms) {
  if (atoms.empty()) throw DomainError("DiscreteDist: empty support");
  std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  DiscreteDist d;
  for (const auto& [key, mass] : atoms) {
    if (!d.keys_.empty() && d.keys_.back() == key) {
      d.masses_.back() += mass;
    } else {
      d.keys_.push_back(key);
      d.values_.push_back(key.to_double());
      d.masses_.push_back(mass);
    }
  }
  d.finish();
  return d;
}

DiscreteDist DiscreteDist::from_values(std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty()) throw DomainError("DiscreteDist: empty support");
  std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  DiscreteDist d;
  for (const auto& [x, mass] : atoms) {
    if (!std::isfinite(x)) throw DomainError("DiscreteDist: non-finite support point");
    if (!d.values_.empty() && x - d.values_.back() <= kMergeTol * std::max(1.0, std::abs(x))) {
      d.masses_.back() += mass;
    } else {
      d.values_.push_back(x);
      d.masses_.push_back(mass);
    }
  }
  d.finish();
  return d;
}

DiscreteDist DiscreteDist::point_mass(double x) { return from_values({{x, 1.0}}); }

void DiscreteDist::finish() {
  cumulative_.resize(masses_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (masses_[i] < 0.0) throw DomainError("DiscreteDist: negative mass");
    acc += masses_[i];
    cumulative_[i] = std::min(acc, 1.0);
  }
  if (std::abs(acc - 1.0) > 1e-9) throw DomainError("DiscreteDist: masses do not sum to 1");
  cumulative_.back() = 1.0;
}

std::size_t DiscreteDist::count_below(double x, bool strict) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), x);
  std::size_t k = static_cast<std::size_t>(it - values_.begin());
  const double tol = kMergeTol * std::max(1.0, std::abs(x));
  if (strict) {
    // Drop points equal to x (within tolerance) from the count.
    while (k > 0 && x - values_[k - 1] <= tol) --k;
  } else if (k < values_.size() && values_[k] - x <= tol) {
    ++k;
  }
  return k;
}

double DiscreteDist::cdf(double x) const {
  const std::size_t k = count_below(x, false);
  return k == 0 ? 0.0 : cumulative_[k - 1];
}

double DiscreteDist::cdf_left(double x) const {
  const std::size_t k = count_below(x, true);
  return k == 0 ? 0.0 : cumulative_[k - 1];
}

double DiscreteDist::cdf(const Rational& x) const {
  if (!exact()) throw DomainError("DiscreteDist: exact query on a real-keyed distribution");
  auto it = std::upper_bound(keys_.begin(), keys_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - keys_.begin());
  return k == 0 ? 0.0 : cumulative_[k - 1];
}

double DiscreteDist::cdf_left(const Rational& x) const {
  if (!exact()) throw DomainError("DiscreteDist: exact query on a real-keyed distribution");
  auto it = std::lower_bound(keys_.begin(), keys_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - keys_.begin());
  return k == 0 ? 0.0 : cumulative_[k - 1];
}

double DiscreteDist::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * masses_[i];
  return s;
}

}  // namespace bootcov
