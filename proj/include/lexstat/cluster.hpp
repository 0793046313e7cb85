#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexstat/distribution.hpp"

namespace lexstat {

struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<double> d;  // row-major, symmetric, zero diagonal

  int size() const { return static_cast<int>(labels.size()); }
  double at(int i, int j) const { return d[static_cast<std::size_t>(i) * labels.size() + j]; }
};

// Pairwise L1 distances between labelled distributions (all same view;
// shorter vectors zero-padded). Throws TooFewInputs for fewer than two
// inputs and InvalidArgument for duplicate labels.
DistanceMatrix distance_matrix(const std::vector<std::pair<std::string, Distribution>>& inputs);

inline constexpr double kDefaultCliqueThreshold = 0.13;

struct Clustering {
  double threshold = 0.0;
  // Extraction order: largest cliques first, then singletons; labels inside
  // each cluster sorted.
  std::vector<std::vector<std::string>> clusters;

  int cluster_of(const std::string& label) const;  // -1 when absent
};

// Threshold-graph clique agglomeration: labels are vertices, edges join
// pairs with distance <= threshold. The largest clique is extracted
// repeatedly (ties: lexicographically smallest label set), so a label
// adjacent to several cliques lands in the largest one; leftover vertices
// become singletons. Throws InvalidThreshold for a negative threshold.
Clustering clique_cluster(const DistanceMatrix& m, double threshold = kDefaultCliqueThreshold);

}  // namespace lexstat
