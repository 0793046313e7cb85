#include "lexstat/gapseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "lexstat/errors.hpp"

namespace lexstat {

GapSeries gaps(const SymbolStream& s, int symbol) {
  if (symbol < 0 || symbol >= s.alphabet_size)
    fail(ErrorCode::out_of_range, "gaps: symbol " + std::to_string(symbol) +
                                      " outside the alphabet of size " +
                                      std::to_string(s.alphabet_size));
  GapSeries g;
  g.profile_name = s.profile_name;
  g.symbol = symbol;
  std::int64_t last = -1;
  std::int64_t occurrences = 0;
  for (std::size_t t = 0; t < s.symbols.size(); ++t) {
    if (s.symbols[t] != symbol) continue;
    ++occurrences;
    if (last >= 0) g.gaps.push_back(static_cast<std::int64_t>(t) - last - 1);
    last = static_cast<std::int64_t>(t);
  }
  if (occurrences < 2)
    fail(ErrorCode::too_few_occurrences,
         "gaps: symbol occurs " + std::to_string(occurrences) + " time(s), need at least 2");
  return g;
}

std::vector<std::size_t> rs_frame_lengths(std::size_t max_len) {
  std::set<std::size_t> lens;
  for (std::size_t base : {std::size_t{8}, std::size_t{12}})
    for (std::size_t k = base; k <= max_len; k *= 2) lens.insert(k);
  if (max_len >= 8) lens.insert(max_len);
  return {lens.begin(), lens.end()};
}

double hurst_rs(const std::vector<double>& series, std::size_t frame_max) {
  if (frame_max < kMinHurstFrame)
    fail(ErrorCode::series_too_short, "hurst_rs: frame cap " + std::to_string(frame_max) +
                                          " below the minimum of " +
                                          std::to_string(kMinHurstFrame));
  if (series.size() < frame_max)
    fail(ErrorCode::series_too_short, "hurst_rs: series of length " +
                                          std::to_string(series.size()) +
                                          " cannot fill a frame of " +
                                          std::to_string(frame_max));

  std::vector<double> x(series.size() - 1);
  for (std::size_t t = 0; t + 1 < series.size(); ++t) x[t] = series[t + 1] - series[t];
  const std::size_t m = x.size();

  std::vector<double> log_k, mean_xi;
  for (std::size_t k : rs_frame_lengths(std::min(frame_max, m))) {
    double sum_xi = 0.0;
    std::size_t frames = 0;
    for (std::size_t s = 0; s + k <= m; s += k) {
      double mu = 0.0;
      for (std::size_t i = 0; i < k; ++i) mu += x[s + i];
      mu /= static_cast<double>(k);
      double var = 0.0;
      for (std::size_t i = 0; i < k; ++i) var += (x[s + i] - mu) * (x[s + i] - mu);
      var /= static_cast<double>(k);
      if (var <= 0.0) continue;  // flat frame: R/sigma undefined, skip
      double acc = 0.0;
      double hi = -std::numeric_limits<double>::infinity();
      double lo = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < k; ++i) {
        acc += x[s + i] - mu;
        hi = std::max(hi, acc);
        lo = std::min(lo, acc);
      }
      sum_xi += std::log((hi - lo) / std::sqrt(var));
      ++frames;
    }
    if (frames > 0) {
      log_k.push_back(std::log(static_cast<double>(k)));
      mean_xi.push_back(sum_xi / static_cast<double>(frames));
    }
  }

  if (log_k.size() < 2)
    fail(ErrorCode::zero_variance,
         "hurst_rs: too few frames with non-zero variance to regress on");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < log_k.size(); ++i) {
    mx += log_k[i];
    my += mean_xi[i];
  }
  mx /= static_cast<double>(log_k.size());
  my /= static_cast<double>(log_k.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < log_k.size(); ++i) {
    sxy += (log_k[i] - mx) * (mean_xi[i] - my);
    sxx += (log_k[i] - mx) * (log_k[i] - mx);
  }
  return sxy / sxx;
}

double hurst_rs(const std::vector<std::int64_t>& series, std::size_t frame_max) {
  return hurst_rs(std::vector<double>(series.begin(), series.end()), frame_max);
}

double hurst_rs(const GapSeries& g, std::size_t frame_max) {
  return hurst_rs(g.gaps, frame_max);
}

HurstSeries hurst_distribution(const GapSeries& g, std::size_t window, std::size_t step) {
  if (step == 0) fail(ErrorCode::invalid_argument, "hurst_distribution: step must be positive");
  if (g.size() < window)
    fail(ErrorCode::series_too_short, "hurst_distribution: " + std::to_string(g.size()) +
                                          " gaps cannot fill a window of " +
                                          std::to_string(window));
  HurstSeries out;
  out.window = window;
  out.step = step;
  std::vector<double> buf(window);
  for (std::size_t end = window; end <= g.size(); end += step) {
    for (std::size_t i = 0; i < window; ++i)
      buf[i] = static_cast<double>(g.gaps[end - window + i]);
    try {
      out.points.push_back({static_cast<std::uint64_t>(end), hurst_rs(buf, window)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::zero_variance) throw;
    }
  }
  return out;
}

HurstSeries hurst_distribution(const SymbolStream& s, int symbol, std::size_t window,
                               std::size_t step) {
  return hurst_distribution(gaps(s, symbol), window, step);
}

Histogram hurst_histogram(const HurstSeries& h) {
  Histogram hist;
  hist.counts.assign(static_cast<std::size_t>(std::lround(1.0 / kHurstBinWidth)), 0);
  const auto bins = static_cast<std::int64_t>(hist.counts.size());
  for (const HurstPoint& p : h.points) {
    auto b = static_cast<std::int64_t>(std::floor(p.h / kHurstBinWidth));
    b = std::clamp(b, std::int64_t{0}, bins - 1);
    ++hist.counts[static_cast<std::size_t>(b)];
  }
  return hist;
}

}  // namespace lexstat
