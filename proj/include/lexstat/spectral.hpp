#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lexstat/distribution.hpp"

namespace lexstat {

// Row-stochastic transition matrix P(i,j) = F(i,j)/f(i) built from bigram
// counts; rows whose letter never occurs as a pair head become uniform and
// are flagged.
struct TransitionMatrix {
  std::string profile_name;
  int n = 0;
  std::vector<double> p;            // row-major, rows sum to 1
  std::vector<double> symbol_freq;  // row count mass / total
  std::vector<int> uniform_rows;    // indices forced to the uniform row
  double norm2 = 0.0;               // spectral (2-)norm of P

  double at(int i, int j) const { return p[static_cast<std::size_t>(i) * n + j]; }
};

// Throws EmptyCounts when the count matrix is all zero.
TransitionMatrix transition_matrix(const BigramCounts& c);

// Validates a row-stochastic matrix given directly (rows must sum to 1
// within 1e-9; throws InvalidArgument otherwise). Used to analyse matrices
// that do not come from a text.
TransitionMatrix transition_from_rows(std::string name, int n, std::vector<double> rows);

// Resolvent-norm values above this cap are reported as the cap with the
// `capped` flag set (lambda is numerically an eigenvalue there).
inline constexpr double kResolventCap = 1e16;

struct ResolventValue {
  double norm = 0.0;  // ||(lambda I - P)^{-1}||_2 = 1/sigma_min(lambda I - P)
  bool capped = false;
};

ResolventValue resolvent_norm(const TransitionMatrix& m, std::complex<double> lambda);

struct GridSpec {
  double re_min = 0, re_max = 0;
  double im_min = 0, im_max = 0;
  int nx = 0, ny = 0;  // node counts per axis (inclusive endpoints)
};

struct PseudospectrumGrid {
  GridSpec region;
  std::vector<double> eps_levels;
  std::vector<double> log10_norm;   // ny*nx, row-major over im then re
  std::vector<std::uint8_t> capped;
  // mask[e*ny*nx + node] = 1 when the node lies in the eps_levels[e] level
  // set, i.e. resolvent norm >= 1/(eps*||P||).
  std::vector<std::uint8_t> mask;

  double re_at(int ix) const;
  double im_at(int iy) const;
};

// Resolvent norms (log10) over a rectangular complex-plane grid plus the
// level-set masks for each requested epsilon. Deterministic for any thread
// count: nodes are independent and written into place. Throws InvalidRegion
// for empty/inverted regions or fewer than 1 node per axis.
PseudospectrumGrid pseudospectrum_grid(const TransitionMatrix& m, const GridSpec& region,
                                       const std::vector<double>& eps_levels, int threads = 1);

inline constexpr int kDichotomyInitialNodes = 256;
inline constexpr int kDichotomyMaxNodes = 1 << 14;
inline constexpr double kDichotomyRelTol = 1e-6;
inline constexpr double kCircleEigenTol = 1e-8;

struct DichotomyResult {
  double r = 0.0;
  double k_r = 0.0;   // ||P||^2 * ||H_r||_2
  int nodes_used = 0;
};

// Circular-dichotomy condition number at radius r:
//   H_r = (1/2pi) integral_0^{2pi} (P* - r e^{-i phi} I)^{-1} (P - r e^{i phi} I)^{-1} dphi,
//   K_r = ||P||^2 ||H_r||_2,
// evaluated by the trapezoidal rule on the periodic integrand, doubling the
// node count from `initial_nodes` until successive K_r values agree to
// kDichotomyRelTol (NoConvergence past kDichotomyMaxNodes). Throws
// EigenvalueOnCircle when an eigenvalue modulus is within kCircleEigenTol
// of r, and InvalidArgument for r <= 0 or non-positive node count.
DichotomyResult radial_dichotomy(const TransitionMatrix& m, double r,
                                 int initial_nodes = kDichotomyInitialNodes);

}  // namespace lexstat
