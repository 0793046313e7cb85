#pragma once

#include <cstdint>

#include "lexstat/distribution.hpp"

namespace lexstat {

// Aggregated per-letter sampling scale sigma(d) = sum_j sqrt(f_j (1 - f_j)).
// View-independent (a permutation of the values). Never throws; the caller
// supplies a distribution that sums to 1.
double sigma_n(const Distribution& d);

// Inverse standard normal CDF. Rational initial approximation refined by one
// Newton step against erf, accurate to well below 1e-8. Throws OutOfRange
// for gamma outside (0,1).
double normal_quantile(double gamma);

struct PrecisionReport {
  std::uint64_t n_chars = 0;
  double sigma = 0.0;
  double ratio = 0.0;    // sqrt(N) / sigma
  double epsilon = 0.0;  // root of u_{1-eps/2} / eps = ratio
};

inline constexpr double kEpsilonBracketLo = 1e-6;
inline constexpr double kEpsilonBracketHi = 0.999;
inline constexpr double kEpsilonTol = 1e-9;

// Solves u_{1-eps/2}/eps = sqrt(N)/sigma for eps by bisection on
// (kEpsilonBracketLo, kEpsilonBracketHi); the left side is strictly
// decreasing, so the root is unique. Throws NoRoot when the ratio lies
// outside the bracket's range and InvalidArgument for N < 2 or sigma <= 0.
PrecisionReport solve_epsilon(std::uint64_t n_chars, double sigma);

}  // namespace lexstat
