#include "lexstat/logmodel.hpp"

#include <cmath>
#include <limits>

#include "lexstat/errors.hpp"

namespace lexstat {

namespace {

void check_shape(int n, int o) {
  if (n < 2) fail(ErrorCode::out_of_range, "alphabet size must be at least 2");
  if (n + o <= 0)
    fail(ErrorCode::invalid_offset, "offset " + std::to_string(o) +
                                        " makes the denominator n+o non-positive for n = " +
                                        std::to_string(n));
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

double gusein_zade(int n, int o, int k) {
  check_shape(n, o);
  if (k < 1 || k > n)
    fail(ErrorCode::out_of_range,
         "rank " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  const double ln_ratio = log_factorial(n) - n * std::log(static_cast<double>(k));
  return (1.0 + ln_ratio / (n + o)) / n;
}

bool model_admissible(int n, int o) {
  if (n < 2 || n + o <= 0) return false;
  // Values decrease strictly in k, so only the last rank can dip below zero.
  return gusein_zade(n, o, n) >= 0.0;
}

Distribution model_distribution(int n, int o, bool renormalize) {
  check_shape(n, o);
  Distribution d;
  d.profile_name = "";
  d.view = View::ordered;
  d.source_len = 0;
  d.freqs.resize(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    d.freqs[static_cast<std::size_t>(k - 1)] = gusein_zade(n, o, k);
    sum += d.freqs[static_cast<std::size_t>(k - 1)];
  }
  if (renormalize && sum != 0.0)
    for (double& f : d.freqs) f /= sum;
  return d;
}

double determination(const Distribution& actual, const Distribution& model) {
  if (actual.view != View::ordered || model.view != View::ordered)
    fail(ErrorCode::view_mismatch, "determination: both inputs must be rank-sorted");
  if (actual.freqs.size() != model.freqs.size())
    fail(ErrorCode::view_mismatch, "determination: lengths differ (" +
                                       std::to_string(actual.freqs.size()) + " vs " +
                                       std::to_string(model.freqs.size()) + ")");
  const std::size_t n = actual.freqs.size();
  double mean = 0.0;
  for (double f : actual.freqs) mean += f;
  mean /= static_cast<double>(n);
  double ss_tot = 0.0, ss_res = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    ss_tot += (actual.freqs[k] - mean) * (actual.freqs[k] - mean);
    ss_res += (actual.freqs[k] - model.freqs[k]) * (actual.freqs[k] - model.freqs[k]);
  }
  if (ss_tot == 0.0)
    fail(ErrorCode::degenerate_variance,
         "determination: actual values are all equal, R^2 is undefined");
  return 1.0 - ss_res / ss_tot;
}

OffsetFit fit_offset(const Distribution& actual, int o_min, int o_max, bool renormalize) {
  if (actual.view != View::ordered)
    fail(ErrorCode::view_mismatch, "fit_offset: input must be rank-sorted");
  const int n = actual.size();
  if (n < 2) fail(ErrorCode::out_of_range, "fit_offset: need at least 2 ranks");

  bool found = false;
  int best_o = 0;
  double best_dev = std::numeric_limits<double>::infinity();
  Distribution best_model;
  for (int o = o_min; o <= o_max; ++o) {
    if (!model_admissible(n, o)) continue;
    Distribution model = model_distribution(n, o, renormalize);
    const double dev = l1_distance(actual, model);
    const bool better =
        !found || dev < best_dev ||
        (dev == best_dev &&
         (std::abs(o) < std::abs(best_o) || (std::abs(o) == std::abs(best_o) && o < best_o)));
    if (better) {
      found = true;
      best_o = o;
      best_dev = dev;
      best_model = std::move(model);
    }
  }
  if (!found)
    fail(ErrorCode::no_admissible_offset,
         "fit_offset: no admissible offset in [" + std::to_string(o_min) + ", " +
             std::to_string(o_max) + "] for n = " + std::to_string(n));

  OffsetFit fit;
  fit.n = n;
  fit.o = best_o;
  fit.l1_dev = best_dev;
  fit.determination = determination(actual, best_model);
  fit.model = std::move(best_model);
  return fit;
}

OffsetFit fit_offset(const Distribution& actual, bool renormalize) {
  const int n = actual.size();
  return fit_offset(actual, -(n - 2), 10, renormalize);
}

}  // namespace lexstat
