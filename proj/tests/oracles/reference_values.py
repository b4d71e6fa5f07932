#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Computed with scipy/mpmath only; nothing here calls into the C++ library.
Run it to regenerate the constants frozen in tests/*.cpp.
"""
import math
from fractions import Fraction

import numpy as np
from scipy import integrate, special, stats

B = stats.binom


def plan(m, alpha):
    v = Fraction(m) * Fraction(str(alpha)) / 2
    ml = math.floor(v) + 1
    return ml, m + 1 - ml


def bracket(h, m, ml, mu):
    return B.cdf(mu - 1, m, h) - B.cdf(ml - 1, m, h)


def el_mean(n, m, alpha):
    ml, mu = plan(m, alpha)

    def f(t):
        z = stats.norm.cdf(t)
        return t / math.sqrt(n) * stats.norm.pdf(t) * (B.pmf(mu - 1, m - 1, z) - B.pmf(ml - 1, m - 1, z))

    pts = [stats.norm.ppf(alpha / 2), stats.norm.ppf(1 - alpha / 2)]
    return m * integrate.quad(f, -9, 9, points=pts, limit=1000, epsabs=1e-13, epsrel=1e-12)[0]


def el_median(n, m, alpha):
    ml, mu = plan(m, alpha)
    a = n // 2 + 1
    cdf = lambda x: stats.beta.cdf(stats.norm.cdf(x), a, n - a + 1)
    pdf = lambda x: n * stats.norm.pdf(x) * B.pmf(a - 1, n - 1, stats.norm.cdf(x))
    f = lambda x: x * pdf(x) * (B.pmf(mu - 1, m - 1, cdf(x)) - B.pmf(ml - 1, m - 1, cdf(x)))
    q = lambda z: stats.norm.ppf(stats.beta.ppf(z, a, n - a + 1))
    return m * integrate.quad(f, -9, 9, points=[q(alpha / 2), q(1 - alpha / 2)], limit=1000,
                              epsabs=1e-13, epsrel=1e-12)[0]


def coverage_unknown_sigma(n, m, alpha):
    ml, mu = plan(m, alpha)
    c = math.sqrt(n / (n - 1))
    f = lambda t: bracket(stats.norm.cdf(-t * c), m, ml, mu) * stats.t.pdf(t, n - 1)
    lo = stats.norm.ppf(alpha / 2) / c
    return integrate.quad(f, -80, 80, points=[lo, -lo], limit=2000, epsabs=1e-13)[0]


def coverage_median_percentile(n, m, alpha):
    ml, mu = plan(m, alpha)
    a = n // 2 + 1
    return sum(bracket(B.cdf(a - 1, n, (n - i) / n), m, ml, mu) * B.pmf(i, n, 0.5) for i in range(n + 1))


def el_median_percentile(n, m, alpha):
    ml, mu = plan(m, alpha)
    a = n // 2 + 1
    total = 0.0
    for i in range(1, n):
        f = lambda t: t * stats.norm.pdf(t) * (B.pmf(i, n - 1, stats.norm.cdf(t)) - B.pmf(i - 1, n - 1, stats.norm.cdf(t)))
        total += bracket(B.cdf(a - 1, n, (n - i) / n), m, ml, mu) * integrate.quad(f, -10, 10, epsabs=1e-13)[0]
    return n * total


def one_sample_tables(n, m, alpha, wilson):
    ml, mu = plan(m, alpha)
    z = stats.norm.ppf(1 - alpha / 2)
    a1, b1 = (1 / (n + z * z), z * z / 2 / (n + z * z)) if wilson else (1 / n, 0.0)
    return ml, mu, a1, b1


def area_coverage(n, m, alpha, wilson=True):
    """Exact: brackets are constant between breakpoints and the integral of a
    binomial pmf over p is a difference of regularized incomplete betas."""
    ml, mu, a1, b1 = one_sample_tables(n, m, alpha, wilson)
    bps = sorted(set([0.0, 1.0] + [a1 * k + b1 for k in range(n + 1) if 0 < a1 * k + b1 < 1]))
    ys = np.arange(n + 1)
    q = a1 * ys + b1
    total = 0.0
    for lo, hi in zip(bps[:-1], bps[1:]):
        x = math.floor(((lo + hi) / 2 - b1) / a1)
        h = B.cdf(x, n, q)
        w = (special.betainc(ys + 1, n - ys + 1, hi) - special.betainc(ys + 1, n - ys + 1, lo)) / (n + 1)
        total += float(np.sum(bracket(h, m, ml, mu) * w))
    return total


def area_el(n, m, alpha, wilson=True):
    ml, mu, a1, b1 = one_sample_tables(n, m, alpha, wilson)
    total = 0.0
    for y in range(n + 1):
        q = a1 * y + b1
        ey = sum(bracket(B.cdf(x, n, q), m, ml, mu) for x in range(n))
        total += a1 * ey / (n + 1)
    return total


def main():
    out = {}
    out["z975"] = stats.norm.ppf(0.95)
    out["B5"] = math.sqrt(2 / 5) * math.exp(special.gammaln(2.5) - special.gammaln(2))
    z = stats.norm.ppf(0.95)
    out["wilson_a1_10_0.1"] = 1 / (10 + z * z)
    out["wilson_b1_10_0.1"] = z * z / 2 / (10 + z * z)
    for n in (5, 31, 301):
        out[f"el_mean({n},5000,0.1)"] = el_mean(n, 5000, 0.1)
    out["el_mean(5,100,0.1)"] = el_mean(5, 100, 0.1)
    out["el_mean(5,20,0.2)"] = el_mean(5, 20, 0.2)
    out["el_median(5,5000,0.1)"] = el_median(5, 5000, 0.1)
    out["el_median(31,100,0.1)"] = el_median(31, 100, 0.1)
    out["cov_nu(5,5000,0.1)"] = coverage_unknown_sigma(5, 5000, 0.1)
    out["cov_nu(301,5000,0.1)"] = coverage_unknown_sigma(301, 5000, 0.1)
    out["cov_nu(5,20,0.2)"] = coverage_unknown_sigma(5, 20, 0.2)
    out["cov_pm(5,50,0.1)"] = coverage_median_percentile(5, 50, 0.1)
    out["cov_pm(5,5000,0.1)"] = coverage_median_percentile(5, 5000, 0.1)
    out["cov_pm(31,100,0.1)"] = coverage_median_percentile(31, 100, 0.1)
    out["el_pm(5,5000,0.1)"] = el_median_percentile(5, 5000, 0.1)
    out["el_pm(31,100,0.1)"] = el_median_percentile(31, 100, 0.1)
    for lvl in (0.8, 0.9, 0.95):
        out[f"area_cwi(10,100,{lvl})"] = area_coverage(10, 100, round(1 - lvl, 10))
    out["area_cwi(30,10000,0.9)"] = area_coverage(30, 10000, 0.1)
    out["area_cwi(100,100,0.95)"] = area_coverage(100, 100, 0.05)
    out["area_el_cwi(10,100,0.9)"] = area_el(10, 100, 0.1)
    out["area_cwa(10,100,0.9)"] = area_coverage(10, 100, 0.1, wilson=False)
    for k, v in out.items():
        print(f"{k} = {v:.15g}")


if __name__ == "__main__":
    main()
