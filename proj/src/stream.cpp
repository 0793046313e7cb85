#include "lexstat/stream.hpp"

#include "lexstat/errors.hpp"

namespace lexstat {

namespace {

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v';
}

void require_same_profile(const SymbolStream& s, const std::string& profile_name,
                          const std::string& what) {
  if (s.profile_name != profile_name)
    fail(ErrorCode::profile_mismatch,
         what + ": stream uses profile '" + s.profile_name + "', expected '" +
             profile_name + "'");
}

}  // namespace

NormalizeResult normalize(const std::string& text, const AlphabetProfile& profile) {
  NormalizeResult r;
  r.stream.profile_name = profile.name;
  r.stream.alphabet_size = profile.size();

  const std::optional<int> space_index =
      profile.space_policy == SpacePolicy::symbol ? profile.letter_index(kSpaceLetter)
                                                  : std::nullopt;

  for (char32_t cp : utf8_decode(text)) {
    if (is_space(cp)) {
      if (space_index) {
        r.stream.symbols.push_back(static_cast<std::uint8_t>(*space_index));
      } else {
        ++r.spaces_dropped;
      }
      continue;
    }
    const char32_t lc = simple_lower(cp);
    if (auto it = profile.folds.find(lc); it != profile.folds.end()) {
      if (it->second < 0) {
        ++r.discarded;
      } else {
        r.stream.symbols.push_back(static_cast<std::uint8_t>(it->second));
      }
      continue;
    }
    if (auto idx = profile.letter_index(lc)) {
      r.stream.symbols.push_back(static_cast<std::uint8_t>(*idx));
    } else {
      ++r.discarded;
    }
  }
  return r;
}

SymbolStream devocalize(const SymbolStream& s, const AlphabetProfile& profile) {
  require_same_profile(s, profile.name, "devocalize");
  SymbolStream out;
  out.profile_name = s.profile_name;
  out.alphabet_size = s.alphabet_size;
  out.symbols.reserve(s.symbols.size());
  for (std::uint8_t sym : s.symbols)
    if (!profile.vowel[sym]) out.symbols.push_back(sym);
  return out;
}

SymbolStream mix_streams(const SymbolStream& a, const SymbolStream& b, int wa, int wb,
                         std::size_t block_len) {
  if (a.profile_name != b.profile_name || a.alphabet_size != b.alphabet_size)
    fail(ErrorCode::profile_mismatch, "mix_streams: inputs use different profiles");
  if (a.empty() || b.empty())
    fail(ErrorCode::empty_stream, "mix_streams: both inputs must be non-empty");
  if (wa <= 0 || wb <= 0)
    fail(ErrorCode::invalid_argument, "mix_streams: weights must be positive");
  if (block_len == 0)
    fail(ErrorCode::invalid_argument, "mix_streams: block length must be positive");

  SymbolStream out;
  out.profile_name = a.profile_name;
  out.alphabet_size = a.alphabet_size;

  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
  // Alternate wa blocks from the first stream with wb blocks from the second,
  // stopping as soon as either source cannot supply a complete block.
  for (;;) {
    for (int k = 0; k < wa; ++k) {
      if (pos_a >= a.size()) return out;
      const std::size_t take = std::min(block_len, a.size() - pos_a);
      out.symbols.insert(out.symbols.end(), a.symbols.begin() + pos_a,
                         a.symbols.begin() + pos_a + take);
      pos_a += take;
      if (take < block_len) return out;
    }
    for (int k = 0; k < wb; ++k) {
      if (pos_b >= b.size()) return out;
      const std::size_t take = std::min(block_len, b.size() - pos_b);
      out.symbols.insert(out.symbols.end(), b.symbols.begin() + pos_b,
                         b.symbols.begin() + pos_b + take);
      pos_b += take;
      if (take < block_len) return out;
    }
  }
}

std::string render(const SymbolStream& s, const AlphabetProfile& profile) {
  require_same_profile(s, profile.name, "render");
  std::string out;
  for (std::uint8_t sym : s.symbols) out += utf8_encode(profile.letters[sym]);
  return out;
}

}  // namespace lexstat
