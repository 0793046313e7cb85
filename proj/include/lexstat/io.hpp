#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lexstat/cluster.hpp"
#include "lexstat/distribution.hpp"
#include "lexstat/identify.hpp"
#include "lexstat/profile.hpp"

namespace lexstat {

// Deterministic numeric formatting shared by every emitter (C locale,
// shortest form with up to 12 significant digits).
std::string format_double(double v);

std::string read_text_file(const std::string& path);           // IoError
void write_text_file(const std::string& path, const std::string& content);

// Distribution tables.
//   alphabetical: "symbol,frequency"
//   ordered:      "rank,symbol,frequency" (symbol blank without a rank map)
void write_distribution_csv(std::ostream& out, const Distribution& d,
                            const AlphabetProfile* profile);

// Reads either distribution table form; the header row selects the view.
// Symbols must be letters of the given profile for alphabetical tables.
// Throws ParseError / IoError.
Distribution read_distribution_csv(const std::string& path, const AlphabetProfile& profile);

// Loads every "<label>.csv" in a directory as a labelled distribution,
// sorted by file name. Throws EmptyReferences when none match.
std::vector<std::pair<std::string, Distribution>> load_distribution_dir(
    const std::string& dir, const AlphabetProfile& profile);

// The same directory contents assembled into a reference library.
ReferenceSet load_reference_dir(const std::string& dir, const AlphabetProfile& profile);

// Lower-triangular distance table in whole percent, one row per label.
void write_distance_matrix_csv(std::ostream& out, const DistanceMatrix& m);

}  // namespace lexstat
