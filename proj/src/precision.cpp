#include "lexstat/precision.hpp"

#include <cmath>

#include "lexstat/errors.hpp"

namespace lexstat {

double sigma_n(const Distribution& d) {
  double sum = 0.0;
  for (double f : d.freqs) {
    const double v = f * (1.0 - f);
    if (v > 0.0) sum += std::sqrt(v);
  }
  return sum;
}

namespace {

// Rational approximation of the inverse normal CDF (relative error ~1e-9
// before refinement).
double quantile_seed(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double normal_quantile(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    fail(ErrorCode::out_of_range, "normal_quantile: probability must lie in (0,1)");
  double x = quantile_seed(gamma);
  // One Newton step against the exact CDF.
  const double cdf = 0.5 * (1.0 + std::erf(x / std::sqrt(2.0)));
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
  if (pdf > 0.0) x -= (cdf - gamma) / pdf;
  return x;
}

namespace {

double quantile_over_eps(double eps) { return normal_quantile(1.0 - eps / 2.0) / eps; }

}  // namespace

PrecisionReport solve_epsilon(std::uint64_t n_chars, double sigma) {
  if (n_chars < 2)
    fail(ErrorCode::invalid_argument, "solve_epsilon: sample length must be at least 2");
  if (!(sigma > 0.0))
    fail(ErrorCode::invalid_argument, "solve_epsilon: sigma must be positive");

  PrecisionReport r;
  r.n_chars = n_chars;
  r.sigma = sigma;
  r.ratio = std::sqrt(static_cast<double>(n_chars)) / sigma;

  double lo = kEpsilonBracketLo;
  double hi = kEpsilonBracketHi;
  // quantile_over_eps decreases strictly, so the bracket endpoints bound the
  // attainable ratios.
  if (quantile_over_eps(lo) < r.ratio || quantile_over_eps(hi) > r.ratio)
    fail(ErrorCode::no_root, "solve_epsilon: ratio " + std::to_string(r.ratio) +
                                 " is outside the solvable bracket");
  while (hi - lo > kEpsilonTol) {
    const double mid = 0.5 * (lo + hi);
    if (quantile_over_eps(mid) > r.ratio)
      lo = mid;
    else
      hi = mid;
  }
  r.epsilon = 0.5 * (lo + hi);
  return r;
}

}  // namespace lexstat
