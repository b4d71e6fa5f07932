#pragma once

// Special functions and the probability distributions the interval
// calculus is built on. Everything here is pure and reentrant.

namespace bootcov {

/// Above this trial count binom_cdf switches from direct summation to the
/// regularized incomplete beta identity.
inline constexpr long kBinomDirectSumLimit = 1000;

/// Snap tolerance used when a real argument is meant to hit an integer atom.
inline constexpr double kIntegerSnapTol = 1e-12;

/// C(n,k) p^k (1-p)^(n-k), evaluated with Loader's saddle-point form so it
/// stays accurate for n in the tens of thousands. Throws DomainError when
/// k is outside [0, n] or p outside [0, 1].
double binom_pmf(long k, long n, double p);

/// Same as binom_pmf but with the complement 1-p supplied by the caller,
/// for arguments produced as Phi(t) where 1-Phi(t) is known more accurately.
double binom_pmf_pq(long k, long n, double p, double q);

/// P(Bino(n,p) <= k). k < 0 gives 0 and k >= n gives 1.
double binom_cdf(long k, long n, double p);

/// The two routes behind binom_cdf, exposed for cross-checking.
double binom_cdf_direct(long k, long n, double p);
double binom_cdf_beta(long k, long n, double p);

/// F_B(x, n, p) for a real argument x: mass at or below x. Values within
/// kIntegerSnapTol of an integer are treated as that integer.
double binom_cdf_real(double x, long n, double p);

/// F_B(x^-, n, p): mass strictly below x.
double binom_cdf_left(double x, long n, double p);

double normal_pdf(double x, double mu = 0.0, double sigma = 1.0);
double normal_cdf(double x, double mu = 0.0, double sigma = 1.0);
/// Inverse of normal_cdf. Throws DomainError unless 0 < p < 1.
double normal_quantile(double p, double mu = 0.0, double sigma = 1.0);

/// Regularized incomplete beta I_x(a, b).
double beta_cdf(double x, double a, double b);
double beta_pdf(double x, double a, double b);
double beta_quantile(double p, double a, double b);

double gamma_ln(double x);

double t_pdf(double x, double df);
double t_cdf(double x, double df);
double t_quantile(double p, double df);

}  // namespace bootcov
