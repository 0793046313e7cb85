#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexstat/profile.hpp"

namespace lexstat {

// A text reduced to alphabet indices under one profile.
struct SymbolStream {
  std::string profile_name;
  int alphabet_size = 0;
  std::vector<std::uint8_t> symbols;

  std::uint64_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
};

struct NormalizeResult {
  SymbolStream stream;
  std::uint64_t discarded = 0;       // codepoints with no mapping
  std::uint64_t spaces_dropped = 0;  // whitespace removed under SpacePolicy::discard
};

// Reduces raw UTF-8 text to a symbol stream: whitespace policy first, then
// lowercasing, then the profile fold table, then the alphabet itself.
// Unmappable codepoints are dropped and tallied; this never throws.
NormalizeResult normalize(const std::string& utf8_text, const AlphabetProfile& profile);

// Removes every vowel of the profile from the stream. The result stays
// declared over the same profile. Throws ProfileMismatch when stream and
// profile disagree.
SymbolStream devocalize(const SymbolStream& s, const AlphabetProfile& profile);

// Deterministic block interleave: per round, wa blocks of block_len symbols
// from a, then wb blocks from b; emission stops as soon as a source cannot
// start a block or ends one short, so origin counts stay within one block
// group of the exact wa:wb ratio. Throws ProfileMismatch for different
// profiles, EmptyStream when either input is empty, and InvalidArgument for
// non-positive weights or block length.
SymbolStream mix_streams(const SymbolStream& a, const SymbolStream& b, int wa, int wb,
                         std::size_t block_len = 1000);

// Renders a stream back to UTF-8 text using the profile letters.
std::string render(const SymbolStream& s, const AlphabetProfile& profile);

}  // namespace lexstat
