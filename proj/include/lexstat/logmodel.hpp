#pragma once

#include "lexstat/distribution.hpp"

namespace lexstat {

// Logarithmic rank-frequency law with integer shape offset o:
//   f(k) = (1/n) * (1 + ln(n!/k^n) / (n+o)),   k = 1..n
// ln(n!) is evaluated through the log-gamma function. The values sum to 1
// for every offset (the ln(n!) terms cancel) and decrease strictly in k.
// Throws InvalidOffset when n+o <= 0 and OutOfRange for k outside [1,n]
// or n < 2.
double gusein_zade(int n, int o, int k);

// Whether every model value is non-negative; large k can go negative when
// n+o is small, and such offsets cannot describe frequencies.
bool model_admissible(int n, int o);

// The full model curve as an ordered distribution. `renormalize` divides by
// the actual sum, which is the identity up to rounding.
Distribution model_distribution(int n, int o, bool renormalize = false);

// Coefficient of determination of `model` as a predictor of `actual` on the
// frequency scale: R^2 = 1 - SS_res/SS_tot. Both inputs are ordered vectors
// of the same length. Throws DegenerateVariance when all actual values are
// equal, ViewMismatch for non-ordered input or length disagreement.
double determination(const Distribution& actual, const Distribution& model);

struct OffsetFit {
  int n = 0;
  int o = 0;
  double l1_dev = 0.0;         // L1 distance between actual and model
  double determination = 0.0;  // R^2 of the chosen model
  Distribution model;
};

// Integer search for the offset minimizing the L1 deviation from `actual`
// over [o_min, o_max]. Offsets with n+o <= 0 or negative model values are
// skipped. Ties go to the offset closest to 0, then to the smaller one.
// `renormalize` scores against renormalized model vectors (a sensitivity
// check; it is the identity up to rounding). Throws NoAdmissibleOffset when
// the range allows no candidate and ViewMismatch for non-ordered input.
OffsetFit fit_offset(const Distribution& actual, int o_min, int o_max,
                     bool renormalize = false);

// Default search range [-(n-2), +10].
OffsetFit fit_offset(const Distribution& actual, bool renormalize = false);

}  // namespace lexstat
