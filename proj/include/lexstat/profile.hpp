#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lexstat {

// Minimal UTF-8 codec. Invalid byte sequences decode to the replacement
// scalar U+FFFD (one per offending byte) so downstream code can discard them.
std::vector<char32_t> utf8_decode(const std::string& text);
std::string utf8_encode(char32_t cp);

// Locale-independent lowercase for the scripts this toolkit works with:
// ASCII, Latin-1 supplement, Latin Extended-A, Greek, and Cyrillic.
// Codepoints outside those ranges are returned unchanged.
char32_t simple_lower(char32_t cp);

// How whitespace in raw text is treated during normalization.
enum class SpacePolicy { discard, symbol };

inline constexpr int kMinLetters = 2;
inline constexpr int kMaxLetters = 64;

// The canonical letter '_' stands for a space when SpacePolicy::symbol is used.
inline constexpr char32_t kSpaceLetter = U'_';

// Alphabet declaration: the ordered canonical letters, which of them are
// vowels, a fold table for variant characters, and the whitespace policy.
struct AlphabetProfile {
  std::string name;
  std::vector<char32_t> letters;           // unique, already lowercase
  std::vector<bool> vowel;                 // aligned with letters
  std::map<char32_t, std::int32_t> folds;  // lowercased source -> letter index, -1 = discard
  SpacePolicy space_policy = SpacePolicy::discard;

  int size() const { return static_cast<int>(letters.size()); }
  int vowel_count() const;
  // Index of a canonical letter, or nullopt when cp is not in the alphabet.
  std::optional<int> letter_index(char32_t cp) const;
};

// Builds and validates a profile from parts. Throws InvalidProfile on
// out-of-range alphabet size, duplicate letters, letters that are not
// fold-stable lowercase, vowels outside the alphabet, fold targets that are
// neither letters nor a discard, or a symbol space policy without '_'.
AlphabetProfile make_profile(std::string name, std::vector<char32_t> letters,
                             const std::vector<char32_t>& vowels,
                             std::vector<std::pair<char32_t, char32_t>> fold_rules,
                             SpacePolicy space_policy,
                             const std::vector<char32_t>& fold_discards = {});

// Parses the line-oriented profile format:
//   name latin26
//   letters a b c ... z
//   vowels a e i o u
//   treat_space discard
//   fold Ä -> a
//   fold ß -> DISCARD
// '#' starts a comment; 'letters'/'vowels' lines may repeat and accumulate.
// Throws ParseError on malformed lines and InvalidProfile on bad content.
AlphabetProfile parse_profile(const std::string& text, const std::string& origin);

// Reads a profile file (throws IoError when unreadable).
AlphabetProfile load_profile(const std::string& path);

}  // namespace lexstat
