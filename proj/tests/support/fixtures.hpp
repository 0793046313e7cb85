#pragma once

#include <string>
#include <vector>

#include "lexstat/distribution.hpp"

// Published per-letter relative frequencies of the Voynich manuscript in the
// EVA and Takahashi transliterations (alphabetical order of each inventory).
namespace fixtures {

inline const std::vector<std::pair<std::string, double>> kEvaFreqs = {
    {"a", 0.07456}, {"c", 0.06951}, {"d", 0.06773}, {"e", 0.10478}, {"f", 0.00264},
    {"g", 0.00050}, {"h", 0.09322}, {"i", 0.06125}, {"k", 0.05708}, {"l", 0.05491},
    {"m", 0.00583}, {"n", 0.03206}, {"o", 0.13296}, {"p", 0.00851}, {"q", 0.02831},
    {"r", 0.03893}, {"s", 0.03857}, {"t", 0.03625}, {"v", 0.00005}, {"x", 0.00018},
    {"y", 0.09217}, {"z", 0.00001}};

inline const std::vector<std::pair<std::string, double>> kTakahashiFreqs = {
    {"a", 0.07641}, {"b", 0.00051}, {"c", 0.00254}, {"d", 0.00269}, {"e", 0.12940},
    {"f", 0.00598}, {"g", 0.00019}, {"h", 0.11559}, {"i", 0.01472}, {"k", 0.02901},
    {"l", 0.05624}, {"m", 0.03713}, {"n", 0.03988}, {"o", 0.13616}, {"q", 0.00870},
    {"r", 0.02402}, {"s", 0.01541}, {"t", 0.12789}, {"u", 0.00011}, {"w", 0.08296},
    {"y", 0.09445}, {"z", 0.00001}};

inline lexstat::Distribution alphabetical_distribution(
    const std::vector<std::pair<std::string, double>>& table, std::string profile_name,
    std::uint64_t source_len = 0) {
  lexstat::Distribution d;
  d.profile_name = std::move(profile_name);
  d.view = lexstat::View::alphabetical;
  d.source_len = source_len;
  for (const auto& [sym, f] : table) d.freqs.push_back(f);
  return d;
}

inline std::string profile_path(const char* stem) {
  return std::string(LEXSTAT_SOURCE_DIR) + "/data/profiles/" + stem + ".prof";
}

}  // namespace fixtures
