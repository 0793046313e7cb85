#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexstat/stream.hpp"

namespace lexstat {

// alphabetical: freqs[i] belongs to letter i of the profile.
// ordered: freqs[k] is the (k+1)-th most frequent value, non-increasing.
enum class View { alphabetical, ordered };

struct Distribution {
  std::string profile_name;
  View view = View::alphabetical;
  std::vector<double> freqs;
  // Ordered views built from counted data keep rank -> alphabet index here;
  // synthetic ordered vectors (models, blends of curves) leave it empty.
  std::vector<int> rank_to_symbol;
  std::uint64_t source_len = 0;  // symbols behind the estimate, 0 = synthetic

  int size() const { return static_cast<int>(freqs.size()); }
};

// Relative letter frequencies of a stream (alphabetical view).
// Throws EmptyStream for an empty stream.
Distribution count_frequencies(const SymbolStream& s);

// Rank-sorted copy of an alphabetical distribution. Descending by value;
// ties keep alphabetical order (stable). Throws ViewMismatch when the input
// is already ordered.
Distribution ordered(const Distribution& d);

// L1 distance sum_k |a(k) - b(k)|. Views must match; the shorter vector is
// zero-padded, so alphabets of different sizes compare directly.
double l1_distance(const Distribution& a, const Distribution& b);

// First `keep` ranks of an ordered distribution, optionally renormalized to
// sum 1 (used when the rarest letters are eliminated before model fitting).
// Throws ViewMismatch for alphabetical input and OutOfRange for keep outside
// [1, size].
Distribution truncate_ranks(const Distribution& d, int keep, bool renormalize);

struct RankMigration {
  std::vector<int> shift;  // indexed by alphabet symbol: |rank_a - rank_b|
  int max_shift = 0;
};

// Per-symbol rank displacement between two ordered distributions of the same
// profile. Both must carry rank maps. Throws ViewMismatch / ProfileMismatch.
RankMigration rank_migration(const Distribution& a, const Distribution& b);

// Raw adjacent-pair counts: counts[i*n+j] = #occurrences of letter j right
// after letter i.
struct BigramCounts {
  std::string profile_name;
  int n = 0;
  std::vector<std::int64_t> counts;  // row-major n*n

  std::int64_t at(int i, int j) const { return counts[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t total() const;
};

// Counts all N-1 adjacent pairs of the stream.
// Throws StreamTooShort when the stream has fewer than 2 symbols.
BigramCounts bigram_counts(const SymbolStream& s);

}  // namespace lexstat
