#include "lexstat/identify.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "lexstat/errors.hpp"

namespace lexstat {

Distribution blend(const std::vector<std::pair<const Distribution*, double>>& parts) {
  if (parts.empty())
    fail(ErrorCode::too_few_inputs, "blend: need at least one distribution");

  const Distribution& first = *parts.front().first;
  double weight_sum = 0.0;
  for (const auto& [dist, w] : parts) {
    if (!(w > 0.0)) fail(ErrorCode::non_positive_weight, "blend: weights must be positive");
    if (dist->view != View::alphabetical)
      fail(ErrorCode::view_mismatch, "blend: inputs must be alphabetical distributions");
    if (dist->profile_name != first.profile_name || dist->size() != first.size())
      fail(ErrorCode::profile_mismatch, "blend: inputs use different profiles");
    weight_sum += w;
  }

  Distribution out;
  out.profile_name = first.profile_name;
  out.view = View::alphabetical;
  out.freqs.assign(first.freqs.size(), 0.0);
  for (const auto& [dist, w] : parts)
    for (std::size_t i = 0; i < out.freqs.size(); ++i)
      out.freqs[i] += (w / weight_sum) * dist->freqs[i];
  return out;
}

Distribution blend(const std::vector<Distribution>& dists, const std::vector<double>& weights) {
  if (dists.size() != weights.size())
    fail(ErrorCode::invalid_argument, "blend: one weight per distribution");
  std::vector<std::pair<const Distribution*, double>> parts;
  parts.reserve(dists.size());
  for (std::size_t i = 0; i < dists.size(); ++i) parts.emplace_back(&dists[i], weights[i]);
  return blend(parts);
}

ReferenceSet make_reference_set(
    const std::vector<std::pair<std::string, Distribution>>& entries) {
  if (entries.empty())
    fail(ErrorCode::empty_references, "make_reference_set: no reference distributions");
  std::set<std::string> seen;
  for (const auto& [label, dist] : entries) {
    (void)dist;
    if (!seen.insert(label).second)
      fail(ErrorCode::invalid_argument, "make_reference_set: duplicate label '" + label + "'");
  }

  ReferenceSet set;
  set.refs.reserve(entries.size());
  for (const auto& [label, dist] : entries) {
    Reference ref;
    ref.label = label;
    ref.dist = dist.view == View::alphabetical ? ordered(dist) : dist;
    set.refs.push_back(std::move(ref));
  }
  std::sort(set.refs.begin(), set.refs.end(),
            [](const Reference& a, const Reference& b) { return a.label < b.label; });
  for (const Reference& ref : set.refs)
    set.padded_len = std::max(set.padded_len, ref.dist.freqs.size());
  for (Reference& ref : set.refs) ref.dist.freqs.resize(set.padded_len, 0.0);
  return set;
}

Verdict identify_window(const Distribution& window, const ReferenceSet& refs,
                        double low_confidence_threshold) {
  if (window.view != View::ordered)
    fail(ErrorCode::view_mismatch, "identify_window: window must be rank-sorted");
  if (refs.refs.empty())
    fail(ErrorCode::empty_references, "identify_window: reference set is empty");

  Verdict v;
  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (const Reference& ref : refs.refs) {
    const double d = l1_distance(window, ref.dist);
    if (d < best) {
      second = best;
      best = d;
      v.label = ref.label;
    } else if (d < second) {
      second = d;
    }
  }
  v.distance = best;
  v.runner_up_gap = refs.refs.size() > 1 ? second - best : 0.0;
  v.low_confidence = best > low_confidence_threshold;
  return v;
}

ScanResult scan(const SymbolStream& s, const ReferenceSet& refs, std::size_t window,
                std::size_t step, double low_confidence_threshold) {
  if (refs.refs.empty()) fail(ErrorCode::empty_references, "scan: reference set is empty");
  if (window < kMinScanWindow)
    fail(ErrorCode::invalid_argument, "scan: window of " + std::to_string(window) +
                                          " below the minimum of " +
                                          std::to_string(kMinScanWindow));
  if (step == 0) fail(ErrorCode::invalid_argument, "scan: step must be positive");
  if (window > s.size())
    fail(ErrorCode::window_too_large, "scan: window of " + std::to_string(window) +
                                          " exceeds the stream length " +
                                          std::to_string(s.size()));

  ScanResult out;
  out.window = window;
  out.step = step;

  // Sliding symbol counts; each verdict sees the window ending at position
  // `end` (1-based).
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(s.alphabet_size), 0);
  for (std::size_t i = 0; i < window; ++i) ++counts[s.symbols[i]];

  Distribution win;
  win.profile_name = s.profile_name;
  win.view = View::alphabetical;
  win.source_len = window;
  win.freqs.resize(counts.size());

  for (std::size_t end = window;; end += step) {
    for (std::size_t i = 0; i < counts.size(); ++i)
      win.freqs[i] = static_cast<double>(counts[i]) / static_cast<double>(window);
    out.verdicts.push_back({static_cast<std::uint64_t>(end),
                            identify_window(ordered(win), refs, low_confidence_threshold)});
    if (end + step > s.size()) break;
    for (std::size_t i = end - window; i < end - window + step; ++i) --counts[s.symbols[i]];
    for (std::size_t i = end; i < end + step; ++i) ++counts[s.symbols[i]];
  }

  for (const WindowVerdict& wv : out.verdicts) {
    if (out.segments.empty() || out.segments.back().label != wv.verdict.label)
      out.segments.push_back({wv.verdict.label, wv.t, wv.t});
    else
      out.segments.back().t_end = wv.t;
  }
  return out;
}

}  // namespace lexstat
