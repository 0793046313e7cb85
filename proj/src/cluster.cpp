#include "lexstat/cluster.hpp"

#include <algorithm>
#include <set>

#include "lexstat/errors.hpp"

namespace lexstat {

DistanceMatrix distance_matrix(
    const std::vector<std::pair<std::string, Distribution>>& inputs) {
  if (inputs.size() < 2)
    fail(ErrorCode::too_few_inputs, "distance_matrix: need at least two distributions");
  std::set<std::string> seen;
  for (const auto& [label, dist] : inputs) {
    (void)dist;
    if (!seen.insert(label).second)
      fail(ErrorCode::invalid_argument, "distance_matrix: duplicate label '" + label + "'");
  }

  DistanceMatrix m;
  const std::size_t n = inputs.size();
  m.labels.reserve(n);
  for (const auto& [label, dist] : inputs) {
    (void)dist;
    m.labels.push_back(label);
  }
  m.d.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = l1_distance(inputs[i].second, inputs[j].second);
      m.d[i * n + j] = dist;
      m.d[j * n + i] = dist;
    }
  return m;
}

int Clustering::cluster_of(const std::string& label) const {
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (const auto& l : clusters[c])
      if (l == label) return static_cast<int>(c);
  return -1;
}

namespace {

// All maximal cliques of the graph restricted to `alive`, by Bron-Kerbosch
// with pivoting. Vertex counts here are small (one per labelled text).
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of p ∪ x with the most neighbours in p.
  int pivot = -1;
  std::size_t best = 0;
  for (const auto& pool : {p, x})
    for (int u : pool) {
      std::size_t cnt = 0;
      for (int v : p)
        if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) ++cnt;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot < 0 || !adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)])
      candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) p2.push_back(u);
    for (int u : x)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::remove(p.begin(), p.end(), v), p.end());
    x.push_back(v);
  }
}

}  // namespace

Clustering clique_cluster(const DistanceMatrix& m, double threshold) {
  if (threshold < 0.0)
    fail(ErrorCode::invalid_threshold, "clique_cluster: threshold must be non-negative");

  const int n = m.size();
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m.at(i, j) <= threshold) {
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      }

  Clustering out;
  out.threshold = threshold;

  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  int remaining = n;
  while (remaining > 0) {
    std::vector<int> alive;
    for (int v = 0; v < n; ++v)
      if (!taken[static_cast<std::size_t>(v)]) alive.push_back(v);

    // Maximal cliques of the remaining subgraph.
    std::vector<std::vector<bool>> sub(adj);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (taken[static_cast<std::size_t>(i)] || taken[static_cast<std::size_t>(j)])
          sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = false;
    std::vector<std::vector<int>> cliques;
    std::vector<int> r;
    bron_kerbosch(sub, r, alive, {}, cliques);

    // Largest clique; ties resolve to the lexicographically smallest label set.
    std::vector<std::string> best_labels;
    std::vector<int> best_clique;
    for (auto& clique : cliques) {
      std::vector<std::string> labels;
      labels.reserve(clique.size());
      for (int v : clique) labels.push_back(m.labels[static_cast<std::size_t>(v)]);
      std::sort(labels.begin(), labels.end());
      const bool better = best_clique.empty() || clique.size() > best_clique.size() ||
                          (clique.size() == best_clique.size() && labels < best_labels);
      if (better) {
        best_labels = std::move(labels);
        best_clique = std::move(clique);
      }
    }

    out.clusters.push_back(best_labels);
    for (int v : best_clique) taken[static_cast<std::size_t>(v)] = true;
    remaining -= static_cast<int>(best_clique.size());
  }
  return out;
}

}  // namespace lexstat
