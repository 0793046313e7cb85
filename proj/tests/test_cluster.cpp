#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "lexstat/cluster.hpp"
#include "lexstat/errors.hpp"
#include "support/synthetic.hpp"

using namespace lexstat;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

Distribution alpha(std::vector<double> freqs) {
  Distribution d;
  d.view = View::alphabetical;
  d.freqs = std::move(freqs);
  return d;
}

// Symmetric matrix from explicit pair distances; unspecified pairs sit at
// `far`, far beyond any clustering threshold used in these tests.
DistanceMatrix matrix_of(std::vector<std::string> labels,
                         const std::map<std::pair<std::string, std::string>, double>& pairs,
                         double far = 0.99) {
  DistanceMatrix m;
  m.labels = std::move(labels);
  const auto n = m.labels.size();
  m.d.assign(n * n, far);
  for (std::size_t i = 0; i < n; ++i) m.d[i * n + i] = 0.0;
  for (const auto& [key, value] : pairs) {
    std::size_t i = n, j = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (m.labels[k] == key.first) i = k;
      if (m.labels[k] == key.second) j = k;
    }
    REQUIRE(i < n);
    REQUIRE(j < n);
    m.d[i * n + j] = value;
    m.d[j * n + i] = value;
  }
  return m;
}

// Every pair inside one cluster must sit within the threshold.
void check_clique_property(const DistanceMatrix& m, const Clustering& c) {
  for (const auto& cluster : c.clusters) {
    for (std::size_t a = 0; a < cluster.size(); ++a) {
      for (std::size_t b = a + 1; b < cluster.size(); ++b) {
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < m.labels.size(); ++k) {
          if (m.labels[k] == cluster[a]) i = k;
          if (m.labels[k] == cluster[b]) j = k;
        }
        CHECK(m.at(static_cast<int>(i), static_cast<int>(j)) <= c.threshold);
      }
    }
  }
}

}  // namespace

TEST_CASE("distance_matrix fills symmetric pairwise distances") {
  const auto m = distance_matrix({{"p", alpha({0.5, 0.5})},
                                  {"q", alpha({0.9, 0.1})},
                                  {"r", alpha({0.5, 0.3, 0.2})}});
  CHECK(m.size() == 3);
  CHECK(m.labels == std::vector<std::string>{"p", "q", "r"});
  CHECK(m.at(0, 0) == 0.0);
  CHECK(m.at(0, 1) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(m.at(1, 0) == m.at(0, 1));
  CHECK(m.at(0, 2) == doctest::Approx(0.4).epsilon(1e-15));  // zero-padded third letter
  CHECK(m.at(2, 1) == m.at(1, 2));
}

TEST_CASE("distance_matrix validates its inputs") {
  CHECK(code_of([] { distance_matrix({}); }) == ErrorCode::too_few_inputs);
  CHECK(code_of([] { distance_matrix({{"only", alpha({1.0})}}); }) ==
        ErrorCode::too_few_inputs);
  CHECK(code_of([] {
          distance_matrix({{"dup", alpha({0.5, 0.5})}, {"dup", alpha({0.9, 0.1})}});
        }) == ErrorCode::invalid_argument);
}

TEST_CASE("two well-separated families cluster into their planted blocks") {
  const auto m = matrix_of({"en", "de", "nl", "ru", "uk"},
                           {{{"en", "de"}, 0.08},
                            {{"en", "nl"}, 0.09},
                            {{"de", "nl"}, 0.07},
                            {{"ru", "uk"}, 0.05}});
  const auto c = clique_cluster(m, 0.13);
  REQUIRE(c.clusters.size() == 2);
  CHECK(c.clusters[0] == std::vector<std::string>{"de", "en", "nl"});
  CHECK(c.clusters[1] == std::vector<std::string>{"ru", "uk"});
  CHECK(c.threshold == 0.13);
  CHECK(c.cluster_of("de") == 0);
  CHECK(c.cluster_of("uk") == 1);
  CHECK(c.cluster_of("xx") == -1);
  check_clique_property(m, c);
}

TEST_CASE("a threshold below every distance yields all singletons") {
  const auto m = matrix_of({"a", "b", "c"}, {{{"a", "b"}, 0.2}, {{"b", "c"}, 0.3}});
  const auto c = clique_cluster(m, 0.1);
  REQUIRE(c.clusters.size() == 3);
  for (const auto& cluster : c.clusters) CHECK(cluster.size() == 1);
}

TEST_CASE("a chain is not a clique: the middle vertex joins one side only") {
  // a-b and b-c are close, a-c is not; {a,b,c} would violate the pairwise
  // bound, so the tie between {a,b} and {b,c} goes to the lexicographically
  // smaller set.
  const auto m = matrix_of({"a", "b", "c"}, {{{"a", "b"}, 0.05}, {{"b", "c"}, 0.05}});
  const auto c = clique_cluster(m, 0.13);
  REQUIRE(c.clusters.size() == 2);
  CHECK(c.clusters[0] == std::vector<std::string>{"a", "b"});
  CHECK(c.clusters[1] == std::vector<std::string>{"c"});
  check_clique_property(m, c);
}

TEST_CASE("a vertex adjacent to two cliques lands in the larger one") {
  // hub connects to everything; the triangle {p,q,hub} outranks the pair.
  const auto m = matrix_of({"hub", "p", "q", "z"},
                           {{{"hub", "p"}, 0.05},
                            {{"hub", "q"}, 0.06},
                            {{"p", "q"}, 0.04},
                            {{"hub", "z"}, 0.07}});
  const auto c = clique_cluster(m, 0.13);
  REQUIRE(c.clusters.size() == 2);
  CHECK(c.clusters[0] == std::vector<std::string>{"hub", "p", "q"});
  CHECK(c.clusters[1] == std::vector<std::string>{"z"});
}

TEST_CASE("negative thresholds are rejected; zero is allowed") {
  const auto m = matrix_of({"a", "b"}, {{{"a", "b"}, 0.2}});
  CHECK(code_of([&] { clique_cluster(m, -0.01); }) == ErrorCode::invalid_threshold);
  const auto c = clique_cluster(m, 0.0);
  CHECK(c.clusters.size() == 2);
}

TEST_CASE("planted random blocks are recovered for any in/out separation") {
  synthetic::Rng rng(701);
  for (int trial = 0; trial < 10; ++trial) {
    // Three blocks of sizes 3/2/2; intra-block < 0.10, inter-block > 0.30.
    const std::vector<std::vector<std::string>> blocks = {
        {"a1", "a2", "a3"}, {"b1", "b2"}, {"c1", "c2"}};
    std::vector<std::string> labels;
    for (const auto& b : blocks) labels.insert(labels.end(), b.begin(), b.end());
    std::map<std::pair<std::string, std::string>, double> pairs;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        const bool same = labels[i][0] == labels[j][0];
        const double d = same ? 0.02 + 0.08 * rng.uniform() : 0.30 + 0.50 * rng.uniform();
        pairs[{labels[i], labels[j]}] = d;
      }
    }
    const auto m = matrix_of(labels, pairs);
    const auto c = clique_cluster(m, 0.13);
    REQUIRE(c.clusters.size() == 3);
    CHECK(c.clusters[0] == blocks[0]);
    // Blocks of equal size come out in lexicographic order.
    CHECK(c.clusters[1] == blocks[1]);
    CHECK(c.clusters[2] == blocks[2]);
    check_clique_property(m, c);
  }
}

TEST_CASE("on planted blocks, loosening the threshold only merges") {
  // With clean block structure the number of clusters can only drop as the
  // threshold grows. (This is NOT true for arbitrary matrices; see the
  // regression case below.)
  const auto m = matrix_of({"a", "b", "c", "d"},
                           {{{"a", "b"}, 0.05},
                            {{"c", "d"}, 0.06},
                            {{"a", "c"}, 0.40},
                            {{"a", "d"}, 0.41},
                            {{"b", "c"}, 0.42},
                            {{"b", "d"}, 0.43}},
                           0.99);
  std::size_t prev = 99;
  for (double t : {0.01, 0.055, 0.07, 0.45, 0.99}) {
    const auto c = clique_cluster(m, t);
    CHECK(c.clusters.size() <= prev);
    prev = c.clusters.size();
  }
  CHECK(clique_cluster(m, 0.07).clusters.size() == 2);
  CHECK(clique_cluster(m, 0.99).clusters.size() == 1);
}

TEST_CASE("regression: cluster count is not monotone in the threshold") {
  // Raising the threshold admits the a-b edge, which steals a and b from
  // their previous partners and strands c and d as singletons: 2 clusters at
  // 0.12 but 3 at 0.16. Greedy clique extraction has no monotonicity
  // guarantee, and consumers must not assume one.
  const auto m = matrix_of(
      {"a", "b", "c", "d"},
      {{{"a", "b"}, 0.15}, {{"a", "d"}, 0.10}, {{"b", "c"}, 0.11}});
  const auto tight = clique_cluster(m, 0.12);
  REQUIRE(tight.clusters.size() == 2);
  CHECK(tight.clusters[0] == std::vector<std::string>{"a", "d"});
  CHECK(tight.clusters[1] == std::vector<std::string>{"b", "c"});

  const auto loose = clique_cluster(m, 0.16);
  REQUIRE(loose.clusters.size() == 3);
  CHECK(loose.clusters[0] == std::vector<std::string>{"a", "b"});
  CHECK(loose.clusters[1] == std::vector<std::string>{"c"});
  CHECK(loose.clusters[2] == std::vector<std::string>{"d"});
}

TEST_CASE("clustering depends on structure, not on which labels spell it") {
  // Rename labels with order-reversing names; same geometry, same partition.
  const auto m1 = matrix_of({"a", "b", "c", "d"},
                            {{{"a", "b"}, 0.05}, {{"c", "d"}, 0.06}});
  const auto m2 = matrix_of({"z", "y", "x", "w"},
                            {{{"z", "y"}, 0.05}, {{"x", "w"}, 0.06}});
  const auto c1 = clique_cluster(m1, 0.13);
  const auto c2 = clique_cluster(m2, 0.13);
  REQUIRE(c1.clusters.size() == c2.clusters.size());
  // Partition shape: cluster sizes agree and renamed members stay together.
  CHECK(c2.cluster_of("z") == c2.cluster_of("y"));
  CHECK(c2.cluster_of("x") == c2.cluster_of("w"));
  CHECK(c2.cluster_of("z") != c2.cluster_of("x"));
}

TEST_CASE("end-to-end: distributions to clusters") {
  // Two tight families in distribution space plus one outlier.
  const auto m = distance_matrix({{"fam1a", alpha({0.50, 0.30, 0.20})},
                                  {"fam1b", alpha({0.52, 0.29, 0.19})},
                                  {"fam2a", alpha({0.20, 0.30, 0.50})},
                                  {"fam2b", alpha({0.18, 0.32, 0.50})},
                                  {"odd", alpha({0.98, 0.01, 0.01})}});
  const auto c = clique_cluster(m, 0.13);
  REQUIRE(c.clusters.size() == 3);
  CHECK(c.cluster_of("fam1a") == c.cluster_of("fam1b"));
  CHECK(c.cluster_of("fam2a") == c.cluster_of("fam2b"));
  CHECK(c.cluster_of("odd") != c.cluster_of("fam1a"));
  CHECK(c.cluster_of("odd") != c.cluster_of("fam2a"));
  check_clique_property(m, c);
}
