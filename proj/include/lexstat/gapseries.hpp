#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexstat/stream.hpp"

namespace lexstat {

// Number of symbols strictly between consecutive occurrences of one letter.
struct GapSeries {
  std::string profile_name;
  int symbol = 0;
  std::vector<std::int64_t> gaps;

  std::size_t size() const { return gaps.size(); }
};

// Gap series of `symbol` in the stream; a letter occurring m times yields
// m-1 gaps. Throws TooFewOccurrences below two occurrences and OutOfRange
// for a symbol outside the alphabet.
GapSeries gaps(const SymbolStream& s, int symbol);

inline constexpr std::size_t kMinHurstFrame = 16;

// Sub-frame lengths used by the rescaled-range estimator: {8,12} * 2^j
// ascending, clipped to max_len, with max_len itself appended.
std::vector<std::size_t> rs_frame_lengths(std::size_t max_len);

// Rescaled-range estimate of the Hurst exponent of a series b:
// on the first differences x(t) = b(t+1) - b(t), every complete sub-frame of
// length k gets xi = ln(R/sigma), where R is the range of the cumulative
// sums of mean-centered x within the frame and sigma the frame's population
// standard deviation; the estimate is the least-squares slope of the
// per-length mean xi against ln k. Frames with sigma = 0 are skipped.
// Throws SeriesTooShort when the series is shorter than frame_max or
// frame_max < 16, and ZeroVariance when fewer than two frame lengths
// survive.
double hurst_rs(const std::vector<double>& series, std::size_t frame_max);
double hurst_rs(const std::vector<std::int64_t>& series, std::size_t frame_max);
double hurst_rs(const GapSeries& g, std::size_t frame_max);

inline constexpr std::size_t kDefaultHurstWindow = 5000;
inline constexpr std::size_t kDefaultHurstStep = 100;

struct HurstPoint {
  std::uint64_t t = 0;  // 1-based end position of the window in the gap series
  double h = 0.0;
};

struct HurstSeries {
  std::size_t window = 0;
  std::size_t step = 0;
  std::vector<HurstPoint> points;
};

// Hurst exponent over a sliding window of `window` gaps advanced by `step`.
// Windows whose differences have no variance anywhere are skipped rather than
// aborting the sweep. Throws SeriesTooShort when the series cannot fill one
// window.
HurstSeries hurst_distribution(const GapSeries& g, std::size_t window = kDefaultHurstWindow,
                               std::size_t step = kDefaultHurstStep);
HurstSeries hurst_distribution(const SymbolStream& s, int symbol,
                               std::size_t window = kDefaultHurstWindow,
                               std::size_t step = kDefaultHurstStep);

inline constexpr double kHurstBinWidth = 0.01;

struct Histogram {
  double bin_width = kHurstBinWidth;
  std::vector<std::int64_t> counts;  // 100 bins covering [0,1]; outliers clamp to edge bins
};

Histogram hurst_histogram(const HurstSeries& h);

}  // namespace lexstat
