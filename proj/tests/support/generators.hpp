#pragma once

// Small seeded generators for property tests.

#include <cmath>
#include <cstdint>
#include <vector>

#include "bootcov/rng.hpp"

namespace bootcov::proptest {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform(); }
  long integer(long lo, long hi) { return lo + static_cast<long>(rng_.below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double prob() { return rng_.uniform(); }
  bool coin() { return rng_.below(2) == 1; }

  std::vector<double> normal_sample(long n, double mu = 0.0, double sigma = 1.0) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = mu + sigma * rng_.normal();
    return v;
  }

  Xoshiro256& rng() { return rng_; }

 private:
  Xoshiro256 rng_;
};

}  // namespace bootcov::proptest
