#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lexstat/distribution.hpp"

namespace lexstat {

// Convex combination of alphabetical distributions over one profile.
// Weights must be positive; they are normalized internally. Throws
// NonPositiveWeight, ProfileMismatch, ViewMismatch (ordered input), and
// TooFewInputs for an empty list.
Distribution blend(const std::vector<std::pair<const Distribution*, double>>& parts);
Distribution blend(const std::vector<Distribution>& dists, const std::vector<double>& weights);

struct Reference {
  std::string label;
  Distribution dist;  // ordered, zero-padded to the set's common length
};

struct ReferenceSet {
  std::vector<Reference> refs;  // sorted by label
  std::size_t padded_len = 0;
};

// Builds the reference library from labelled distributions (alphabetical
// inputs are rank-sorted first). Throws EmptyReferences and InvalidArgument
// for duplicate labels.
ReferenceSet make_reference_set(const std::vector<std::pair<std::string, Distribution>>& entries);

inline constexpr double kLowConfidenceDistance = 0.15;

struct Verdict {
  std::string label;
  double distance = 0.0;        // L1 to the winning reference
  double runner_up_gap = 0.0;   // second-best minus best, 0 with one reference
  bool low_confidence = false;  // distance above the declared threshold
};

// Nearest reference to an ordered window distribution by L1 distance over
// the padded rank vectors. Ties resolve to the first label in sorted order.
// Throws ViewMismatch for a non-ordered window and EmptyReferences.
Verdict identify_window(const Distribution& window, const ReferenceSet& refs,
                        double low_confidence_threshold = kLowConfidenceDistance);

inline constexpr std::size_t kMinScanWindow = 50;
inline constexpr std::size_t kDefaultScanWindow = 1000;

struct WindowVerdict {
  std::uint64_t t = 0;  // 1-based end position of the window in the stream
  Verdict verdict;
};

struct Segment {
  std::string label;
  std::uint64_t t_begin = 0;  // first and last window end carrying this label
  std::uint64_t t_end = 0;
};

struct ScanResult {
  std::size_t window = 0;
  std::size_t step = 0;
  std::vector<WindowVerdict> verdicts;  // floor((N-n)/s)+1 of them
  std::vector<Segment> segments;        // verdicts merged by run of equal labels
};

// Slides a window of n symbols in steps of s over the stream and identifies
// each window. Throws WindowTooLarge when n exceeds the stream length,
// InvalidArgument when n < kMinScanWindow or s = 0, and EmptyReferences.
ScanResult scan(const SymbolStream& s, const ReferenceSet& refs,
                std::size_t window = kDefaultScanWindow, std::size_t step = 1,
                double low_confidence_threshold = kLowConfidenceDistance);

}  // namespace lexstat
