#include "bootcov/nonparam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <type_traits>
#include <utility>

#include <fmt/format.h>

#include "bootcov/error.hpp"
#include "bootcov/percentile.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {
namespace {

// All compositions (k_1..k_n) of n with their resample counts n!/prod k_j!.
struct Compositions {
  long n = 0;
  std::vector<std::uint8_t> parts;  // n entries per composition
  std::vector<std::uint64_t> count;
  std::uint64_t total = 1;          // n^n

  explicit Compositions(long n_) : n(n_) {
    if (n < 1) throw DomainError("bootstrap mean: sample must be nonempty");
    if (n > kCompositionCap)
      throw EnumerationCapExceeded(
          fmt::format("bootstrap mean: n={} exceeds the enumeration cap {}; use the Monte Carlo path", n, kCompositionCap));
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (long i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
    for (long i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
    std::vector<std::uint8_t> k(n, 0);
    recurse(k, 0, n, fact);
  }

  std::size_t size() const { return count.size(); }

 private:
  void recurse(std::vector<std::uint8_t>& k, long j, long left, const std::vector<std::uint64_t>& fact) {
    if (j == n - 1) {
      k[j] = static_cast<std::uint8_t>(left);
      std::uint64_t c = fact[n];
      for (long i = 0; i < n; ++i) c /= fact[k[i]];
      parts.insert(parts.end(), k.begin(), k.end());
      count.push_back(c);
      return;
    }
    for (long v = left; v >= 0; --v) {
      k[j] = static_cast<std::uint8_t>(v);
      recurse(k, j + 1, left - v, fact);
    }
  }
};

// Bracket terms F_B(m_u-1, m, c/N) and F_B(m_l-1, m, c/N) for integer counts c.
class CountBrackets {
 public:
  static constexpr std::uint64_t kTableLimit = 2'000'000;

  CountBrackets(const BootstrapPlan& plan, std::uint64_t total) : plan_(plan), total_(total) {
    if (total <= kTableLimit) {
      gu_.resize(total + 1);
      gl_.resize(total + 1);
      for (std::uint64_t c = 0; c <= total; ++c) {
        const double h = static_cast<double>(c) / static_cast<double>(total);
        gu_[c] = binom_cdf(plan.upper_index - 1, plan.m, h);
        gl_[c] = binom_cdf(plan.lower_index - 1, plan.m, h);
      }
    }
  }
  double upper(std::uint64_t c) const {
    return gu_.empty() ? binom_cdf(plan_.upper_index - 1, plan_.m, frac(c)) : gu_[c];
  }
  double lower(std::uint64_t c) const {
    return gl_.empty() ? binom_cdf(plan_.lower_index - 1, plan_.m, frac(c)) : gl_[c];
  }

 private:
  double frac(std::uint64_t c) const { return static_cast<double>(c) / static_cast<double>(total_); }
  BootstrapPlan plan_;
  std::uint64_t total_;
  std::vector<double> gu_, gl_;
};

class CpnEngine {
 public:
  CpnEngine(long n, const BootstrapPlan& plan) : comps_(n), brackets_(plan, comps_.total) {}

  Replicate conditional(const std::vector<double>& y, double mu, std::vector<double>& vals,
                        std::vector<std::uint32_t>& order) const {
    const long n = comps_.n;
    const std::size_t nc = comps_.size();
    vals.resize(nc);
    order.resize(nc);
    const std::uint8_t* k = comps_.parts.data();
    for (std::size_t c = 0; c < nc; ++c, k += n) {
      double s = 0.0;
      for (long j = 0; j < n; ++j) s += k[j] * y[j];
      vals[c] = s / static_cast<double>(n);
    }
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return vals[a] < vals[b]; });

    const double tol = DiscreteDist::kMergeTol * std::max(1.0, std::abs(mu));
    std::uint64_t below = 0, at = 0, cum = 0;
    double width = 0.0;
    for (std::size_t s = 0; s < nc; ++s) {
      const double v = vals[order[s]];
      const std::uint64_t c = comps_.count[order[s]];
      if (v < mu - tol) below += c;
      if (v <= mu + tol) at += c;
      cum += c;
      if (s + 1 < nc) {
        const double gap = vals[order[s + 1]] - v;
        if (gap > 0.0) width += gap * std::max(0.0, brackets_.upper(cum) - brackets_.lower(cum));
      }
    }
    return {std::max(0.0, brackets_.upper(below) - brackets_.lower(at)), width};
  }

 private:
  Compositions comps_;
  CountBrackets brackets_;
};

template <class T, class Key>
CompositionDist compose(const std::vector<T>& sample, Key key_of) {
  const Compositions comps(static_cast<long>(sample.size()));
  const long n = comps.n;
  using K = decltype(key_of(std::declval<const std::uint8_t*>()));
  std::vector<std::pair<K, std::uint64_t>> atoms;
  atoms.reserve(comps.size());
  const std::uint8_t* k = comps.parts.data();
  for (std::size_t c = 0; c < comps.size(); ++c, k += n) atoms.emplace_back(key_of(k), comps.count[c]);
  std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  CompositionDist out;
  out.total = comps.total;
  std::vector<K> keys;
  for (const auto& [key, cnt] : atoms) {
    bool same;
    if constexpr (std::is_same_v<K, double>) {
      same = !keys.empty() && key - keys.back() <= DiscreteDist::kMergeTol * std::max(1.0, std::abs(key));
    } else {
      same = !keys.empty() && keys.back() == key;
    }
    if (same) {
      out.counts.back() += cnt;
    } else {
      keys.push_back(key);
      out.counts.push_back(cnt);
    }
  }
  const double tot = static_cast<double>(out.total);
  if constexpr (std::is_same_v<K, double>) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < keys.size(); ++i) pts.emplace_back(keys[i], static_cast<double>(out.counts[i]) / tot);
    out.dist = DiscreteDist::from_values(std::move(pts));
  } else {
    std::vector<std::pair<Rational, double>> pts;
    for (std::size_t i = 0; i < keys.size(); ++i) pts.emplace_back(keys[i], static_cast<double>(out.counts[i]) / tot);
    out.dist = DiscreteDist::from_keyed(std::move(pts));
  }
  return out;
}

BootstrapPlan plan_checked(long m, double alpha) { return make_plan(m, alpha); }

long median_rank(long n) {
  if (n < 1 || n % 2 == 0) throw UnsupportedDesign("bootstrap median: n must be odd");
  return n / 2 + 1;
}

double median_h(long n, long i) {
  return binom_cdf(median_rank(n) - 1, n, static_cast<double>(n - i) / static_cast<double>(n));
}

}  // namespace

std::uint64_t s_count(long n, long t) {
  if (n < 1 || t < 0) throw DomainError("s_count: need n >= 1 and t >= 0");
  std::vector<std::uint64_t> row(static_cast<std::size_t>(t + 1), 1);  // S(1, j) = 1
  for (long i = 2; i <= n; ++i)
    for (long j = 1; j <= t; ++j) row[j] += row[j - 1];  // S(i,j) = S(i,j-1) + S(i-1,j)
  return row[t];
}

Rational CompositionDist::mass(std::size_t i) const {
  return Rational(static_cast<std::int64_t>(counts.at(i)), static_cast<std::int64_t>(total));
}

Rational CompositionDist::cdf_at(std::size_t i) const {
  std::uint64_t c = 0;
  for (std::size_t j = 0; j <= i; ++j) c += counts.at(j);
  return Rational(static_cast<std::int64_t>(c), static_cast<std::int64_t>(total));
}

CompositionDist dist_mean_boot(const std::vector<double>& sample) {
  const long n = static_cast<long>(sample.size());
  return compose(sample, [&](const std::uint8_t* k) {
    double s = 0.0;
    for (long j = 0; j < n; ++j) s += k[j] * sample[j];
    return s / static_cast<double>(n);
  });
}

CompositionDist dist_mean_boot(const std::vector<Rational>& sample) {
  const long n = static_cast<long>(sample.size());
  return compose(sample, [&](const std::uint8_t* k) {
    Rational s(0);
    for (long j = 0; j < n; ++j) s = s + Rational(k[j]) * sample[j];
    return s / Rational(n);
  });
}

double cpn_upper_bound(long n) {
  if (n < 1) throw DomainError("cpn_upper_bound: n must be at least 1");
  return 1.0 - std::ldexp(1.0, -static_cast<int>(n - 1));
}

double coverage_cpn_n2(long m, double alpha) {
  const BootstrapPlan plan = plan_checked(m, alpha);
  return 0.5 * (binom_cdf(plan.upper_index - 1, m, 0.25) - binom_cdf(plan.lower_index - 1, m, 0.25));
}

QuadratureResult quantile_spread_integral(const QuadratureSpec& spec) {
  return integrate_unit_quantile([](const UnitPoint& u) { return u.t * (u.z - u.zc); }, spec);
}

double el_cpn_n2(long m, double alpha, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  const BootstrapPlan plan = plan_checked(m, alpha);
  const QuadratureResult q = quantile_spread_integral();
  if (!q.converged) throw QuadratureNotConverged("el_cpn_n2: quadrature did not converge", q.value, q.abs_error);
  return 2.0 * sigma * (binom_cdf(plan.upper_index - 1, m, 0.25) - binom_cdf(plan.lower_index - 1, m, 0.25)) * q.value;
}

Replicate cpn_conditional(const std::vector<double>& sample, double mu, const BootstrapPlan& plan) {
  const CpnEngine engine(static_cast<long>(sample.size()), plan);
  std::vector<double> vals;
  std::vector<std::uint32_t> order;
  return engine.conditional(sample, mu, vals, order);
}

EvalResult evaluate_cpn(long n, long m, double alpha, const CpnOptions& options) {
  if (n < 1) throw DomainError("C_pN: n must be at least 1");
  if (!(options.sigma > 0.0)) throw DomainError("sigma must be positive");
  const BootstrapPlan plan = plan_checked(m, alpha);

  if (options.mode == CpnMode::ExactEnum) {
    if (n > 2)
      throw UnsupportedDesign(fmt::format(
          "C_pN exact enumeration is available for n <= 2 only (n={}); use rao-blackwell-mc or full-mc", n));
    EvalResult r;
    r.method = Method::Quadrature;
    r.tolerance = QuadratureSpec{}.abs_tol;
    if (n == 1) {
      r.method = Method::Exact;
      return r;  // the interval collapses to the single observation
    }
    // Signs of y1, y2 and which is larger in magnitude: 8 equiprobable
    // configurations under a symmetric continuous law, and the bracket at 0
    // depends on nothing else.
    double cov = 0.0;
    for (double s1 : {-1.0, 1.0})
      for (double s2 : {-1.0, 1.0})
        for (double big : {1.0, 2.0}) cov += cpn_conditional({s1 * big, s2 * (3.0 - big)}, 0.0, plan).coverage;
    r.coverage = cov / 8.0;
    r.el = el_cpn_n2(m, alpha, options.sigma);
    return r;
  }

  if (options.mode == CpnMode::FullMc) {
    NonparamMcDesign d{n, plan, NormalEstimator::Mean, options.family, options.mu, options.sigma};
    return simulate(d, options.mc).to_eval(options.mc.seed);
  }

  options.mc.validate();
  const CpnEngine engine(n, plan);
  const double mu = options.mu, sigma = options.sigma;
  const DataFamily family = options.family;
  const McEstimate est = run_replicates(options.mc, [&](long, Xoshiro256& rng) {
    thread_local std::vector<double> vals;
    thread_local std::vector<std::uint32_t> order;
    std::vector<double> y(static_cast<std::size_t>(n));
    for (auto& v : y) v = mu + sigma * (family == DataFamily::Normal ? rng.normal() : rng.laplace());
    return engine.conditional(y, mu, vals, order);
  });
  return est.to_eval(options.mc.seed);
}

EvalResult coverage_cpn(long n, long m, double alpha, CpnMode mode, long reps, std::uint64_t seed) {
  CpnOptions o;
  o.mode = mode;
  o.mc.reps = reps;
  o.mc.seed = seed;
  return evaluate_cpn(n, m, alpha, o);
}

EvalResult el_cpn(long n, long m, double alpha, double sigma, long reps, std::uint64_t seed) {
  CpnOptions o;
  o.mc.reps = reps;
  o.mc.seed = seed;
  o.sigma = sigma;
  return evaluate_cpn(n, m, alpha, o);
}

DiscreteDist dist_median_boot(const std::vector<double>& sample) {
  const long n = static_cast<long>(sample.size());
  median_rank(n);
  std::vector<double> y = sample;
  std::sort(y.begin(), y.end());
  std::vector<std::pair<double, double>> atoms;
  double prev = 0.0;
  for (long i = 1; i <= n; ++i) {
    const double h = i == n ? 1.0 : median_h(n, i);
    atoms.emplace_back(y[i - 1], std::max(0.0, h - prev));
    prev = h;
  }
  return DiscreteDist::from_values(std::move(atoms));
}

Rational median_boot_cdf_exact(long n, long i) {
  const long a = median_rank(n);
  if (n > 15) throw DomainError("median_boot_cdf_exact: n too large for 64-bit exact arithmetic");
  if (i < 0 || i > n) throw DomainError("median_boot_cdf_exact: i outside 0..n");
  // sum_{w=0}^{a-1} C(n,w) (n-i)^w i^(n-w) / n^n
  __int128_t num = 0, den = 1;
  for (long j = 0; j < n; ++j) den *= n;
  for (long w = 0; w < a; ++w) {
    __int128_t c = 1;
    for (long j = 0; j < w; ++j) c = c * (n - j) / (j + 1);
    __int128_t t = c;
    for (long j = 0; j < w; ++j) t *= (n - i);
    for (long j = 0; j < n - w; ++j) t *= i;
    num += t;
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

double coverage_cpm(long n, long m, double alpha) {
  median_rank(n);
  const BootstrapPlan plan = plan_checked(m, alpha);
  double s = 0.0;
  for (long i = 0; i <= n; ++i) {
    const double h = median_h(n, i);
    s += bracket(h, h, plan) * binom_pmf(i, n, 0.5);
  }
  return s;
}

QuantileFamily QuantileFamily::normal_family(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  QuantileFamily f;
  f.name = "normal";
  f.normal = true;
  f.sigma = sigma;
  return f;
}

QuantileFamily QuantileFamily::custom(std::string name, std::function<double(double)> quantile) {
  QuantileFamily f;
  f.name = std::move(name);
  f.quantile = std::move(quantile);
  return f;
}

QuadratureResult el_cpm_quad(long n, long m, double alpha, const QuantileFamily& family, const QuadratureSpec& spec) {
  median_rank(n);
  const BootstrapPlan plan = plan_checked(m, alpha);
  if (n == 1) return {0.0, 0.0, 0, true};
  // weight(z) = sum_i b_i [p_B(i, n-1, z) - p_B(i-1, n-1, z)], i = 1..n-1
  std::vector<double> b(static_cast<std::size_t>(n), 0.0);
  for (long i = 1; i <= n - 1; ++i) {
    const double h = median_h(n, i);
    b[i] = bracket(h, h, plan);
  }
  auto weight = [&](double z, double zc) {
    double w = 0.0;
    for (long i = 1; i <= n - 1; ++i) {
      if (b[i] == 0.0) continue;
      w += b[i] * (binom_pmf_pq(i, n - 1, z, zc) - binom_pmf_pq(i - 1, n - 1, z, zc));
    }
    return w;
  };
  std::vector<double> breaks;
  for (long i = 1; i < n - 1; ++i) breaks.push_back(static_cast<double>(i) / static_cast<double>(n - 1));
  QuadratureResult r;
  if (family.normal) {
    r = integrate_unit_quantile([&](const UnitPoint& u) { return u.t * weight(u.z, u.zc); }, spec, breaks);
    r.value *= family.sigma;
    r.abs_error *= family.sigma;
  } else {
    if (!family.quantile) throw DomainError("el_cpm: custom family without a quantile function");
    r = integrate([&](double z) { return family.quantile(z) * weight(z, 1.0 - z); }, 0.0, 1.0, spec, breaks);
  }
  r.value *= static_cast<double>(n);
  r.abs_error *= static_cast<double>(n);
  return r;
}

double el_cpm(long n, long m, double alpha, const QuantileFamily& family) {
  const QuadratureResult r = el_cpm_quad(n, m, alpha, family);
  if (!r.converged) throw QuadratureNotConverged("el_cpm: quadrature did not converge", r.value, r.abs_error);
  return r.value;
}

}  // namespace bootcov
