#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "bootcov/stats.hpp"

namespace bootcov {

/// SplitMix64 step; also used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for replicate `index` of a run seeded with `master`. Depends only on
/// the pair, so any partition of replicates over threads sees the same draws.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0xd1b54a32d192ed03ULL * (index + 1));
  splitmix64(s);
  return splitmix64(s);
}

/// xoshiro256** 1.0.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on the open interval (0,1), 53-bit resolution.
  double uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal by inversion, so streams are reproducible across
  /// standard libraries.
  double normal() { return normal_quantile(uniform()); }

  /// Standard Laplace (scale 1) by inversion.
  double laplace() {
    const double u = uniform() - 0.5;
    return u < 0.0 ? std::log1p(2.0 * u) : -std::log1p(-2.0 * u);
  }

  /// Index in [0, k).
  std::uint64_t below(std::uint64_t k) {
    // Lemire's multiply-shift with rejection.
    std::uint64_t x = (*this)();
    __uint128_t mprod = static_cast<__uint128_t>(x) * k;
    std::uint64_t l = static_cast<std::uint64_t>(mprod);
    if (l < k) {
      const std::uint64_t thresh = (0 - k) % k;
      while (l < thresh) {
        x = (*this)();
        mprod = static_cast<__uint128_t>(x) * k;
        l = static_cast<std::uint64_t>(mprod);
      }
    }
    return static_cast<std::uint64_t>(mprod >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

/// Inverse-CDF sampler for Bino(n, p) from a precomputed cumulative table.
class BinomialSampler {
 public:
  BinomialSampler(long n, double p) : n_(n), cum_(static_cast<std::size_t>(n + 1)) {
    double acc = 0.0;
    for (long k = 0; k <= n; ++k) {
      acc += binom_pmf(k, n, p);
      cum_[k] = acc;
    }
    cum_[n] = 1.0;
  }
  long operator()(Xoshiro256& rng) const {
    const double u = rng.uniform();
    long k = 0;
    while (k < n_ && cum_[k] < u) ++k;
    return k;
  }

 private:
  long n_;
  std::vector<double> cum_;
};

}  // namespace bootcov
