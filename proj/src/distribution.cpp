#include "lexstat/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lexstat/errors.hpp"

namespace lexstat {

Distribution count_frequencies(const SymbolStream& s) {
  if (s.empty()) fail(ErrorCode::empty_stream, "count_frequencies: empty stream");
  Distribution d;
  d.profile_name = s.profile_name;
  d.view = View::alphabetical;
  d.source_len = s.size();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(s.alphabet_size), 0);
  for (std::uint8_t sym : s.symbols) ++counts[sym];
  d.freqs.resize(counts.size());
  const double total = static_cast<double>(s.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    d.freqs[i] = static_cast<double>(counts[i]) / total;
  return d;
}

Distribution ordered(const Distribution& d) {
  if (d.view == View::ordered)
    fail(ErrorCode::view_mismatch, "ordered: input is already rank-sorted");
  Distribution out;
  out.profile_name = d.profile_name;
  out.view = View::ordered;
  out.source_len = d.source_len;
  out.rank_to_symbol.resize(d.freqs.size());
  std::iota(out.rank_to_symbol.begin(), out.rank_to_symbol.end(), 0);
  std::stable_sort(out.rank_to_symbol.begin(), out.rank_to_symbol.end(),
                   [&](int a, int b) { return d.freqs[a] > d.freqs[b]; });
  out.freqs.resize(d.freqs.size());
  for (std::size_t k = 0; k < out.freqs.size(); ++k)
    out.freqs[k] = d.freqs[static_cast<std::size_t>(out.rank_to_symbol[k])];
  return out;
}

double l1_distance(const Distribution& a, const Distribution& b) {
  if (a.view != b.view)
    fail(ErrorCode::view_mismatch, "l1_distance: cannot compare different views");
  const std::size_t len = std::max(a.freqs.size(), b.freqs.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    const double av = k < a.freqs.size() ? a.freqs[k] : 0.0;
    const double bv = k < b.freqs.size() ? b.freqs[k] : 0.0;
    sum += std::abs(av - bv);
  }
  return sum;
}

Distribution truncate_ranks(const Distribution& d, int keep, bool renormalize) {
  if (d.view != View::ordered)
    fail(ErrorCode::view_mismatch, "truncate_ranks: input must be rank-sorted");
  if (keep < 1 || keep > d.size())
    fail(ErrorCode::out_of_range, "truncate_ranks: keep " + std::to_string(keep) +
                                      " outside [1, " + std::to_string(d.size()) + "]");
  Distribution out;
  out.profile_name = d.profile_name;
  out.view = View::ordered;
  out.source_len = d.source_len;
  out.freqs.assign(d.freqs.begin(), d.freqs.begin() + keep);
  if (!d.rank_to_symbol.empty())
    out.rank_to_symbol.assign(d.rank_to_symbol.begin(), d.rank_to_symbol.begin() + keep);
  if (renormalize) {
    const double sum = std::accumulate(out.freqs.begin(), out.freqs.end(), 0.0);
    if (sum > 0.0)
      for (double& f : out.freqs) f /= sum;
  }
  return out;
}

RankMigration rank_migration(const Distribution& a, const Distribution& b) {
  if (a.view != View::ordered || b.view != View::ordered)
    fail(ErrorCode::view_mismatch, "rank_migration: both inputs must be rank-sorted");
  if (a.profile_name != b.profile_name)
    fail(ErrorCode::profile_mismatch, "rank_migration: inputs use different profiles");
  if (a.rank_to_symbol.size() != a.freqs.size() || b.rank_to_symbol.size() != b.freqs.size())
    fail(ErrorCode::view_mismatch, "rank_migration: inputs must carry rank maps");
  if (a.freqs.size() != b.freqs.size())
    fail(ErrorCode::view_mismatch, "rank_migration: alphabet sizes differ");

  const std::size_t n = a.freqs.size();
  std::vector<int> rank_a(n, 0), rank_b(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    rank_a[static_cast<std::size_t>(a.rank_to_symbol[k])] = static_cast<int>(k);
    rank_b[static_cast<std::size_t>(b.rank_to_symbol[k])] = static_cast<int>(k);
  }
  RankMigration out;
  out.shift.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.shift[i] = std::abs(rank_a[i] - rank_b[i]);
    out.max_shift = std::max(out.max_shift, out.shift[i]);
  }
  return out;
}

std::int64_t BigramCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

BigramCounts bigram_counts(const SymbolStream& s) {
  if (s.size() < 2)
    fail(ErrorCode::stream_too_short, "bigram_counts: need at least 2 symbols, have " +
                                          std::to_string(s.size()));
  BigramCounts c;
  c.profile_name = s.profile_name;
  c.n = s.alphabet_size;
  c.counts.assign(static_cast<std::size_t>(c.n) * c.n, 0);
  for (std::size_t t = 0; t + 1 < s.symbols.size(); ++t)
    ++c.counts[static_cast<std::size_t>(s.symbols[t]) * c.n + s.symbols[t + 1]];
  return c;
}

}  // namespace lexstat
