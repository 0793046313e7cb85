#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "lexstat/errors.hpp"
#include "lexstat/gapseries.hpp"
#include "support/oracles.hpp"
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

SymbolStream stream_of(std::vector<std::uint8_t> symbols, int alphabet_size) {
  SymbolStream s;
  s.profile_name = "test";
  s.alphabet_size = alphabet_size;
  s.symbols = std::move(symbols);
  return s;
}

GapSeries gap_series(std::vector<std::int64_t> values) {
  GapSeries g;
  g.profile_name = "test";
  g.symbol = 0;
  g.gaps = std::move(values);
  return g;
}

}  // namespace

TEST_CASE("gaps counts the symbols strictly between occurrences") {
  const auto g = gaps(stream_of({0, 1, 2, 0}, 3), 0);
  CHECK(g.gaps == std::vector<std::int64_t>{2});
  CHECK(g.symbol == 0);
  CHECK(g.profile_name == "test");

  CHECK(gaps(stream_of({0, 0, 0}, 1), 0).gaps == std::vector<std::int64_t>{0, 0});
  CHECK(gaps(stream_of({1, 0, 1, 1, 0}, 2), 0).gaps == std::vector<std::int64_t>{2});
  CHECK(gaps(stream_of({1, 0, 1, 1, 0}, 2), 1).gaps == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("gap values reconstruct the occurrence positions") {
  synthetic::Rng rng(801);
  const auto s = synthetic::sample_stream(rng, rng.simplex(4), 500, "test");
  for (int sym = 0; sym < 4; ++sym) {
    std::vector<std::size_t> positions;
    for (std::size_t t = 0; t < s.symbols.size(); ++t)
      if (s.symbols[t] == sym) positions.push_back(t);
    if (positions.size() < 2) continue;
    const auto g = gaps(s, sym);
    REQUIRE(g.gaps.size() == positions.size() - 1);
    std::size_t p = positions.front();
    for (std::size_t i = 0; i < g.gaps.size(); ++i) {
      p += static_cast<std::size_t>(g.gaps[i]) + 1;
      CHECK(p == positions[i + 1]);
    }
  }
}

TEST_CASE("gaps validates symbol and occurrence count") {
  const auto s = stream_of({0, 1, 0}, 2);
  CHECK(code_of([&] { gaps(s, -1); }) == ErrorCode::out_of_range);
  CHECK(code_of([&] { gaps(s, 2); }) == ErrorCode::out_of_range);
  CHECK(code_of([&] { gaps(s, 1); }) == ErrorCode::too_few_occurrences);
  CHECK(code_of([] { gaps(stream_of({0, 0}, 2), 1); }) == ErrorCode::too_few_occurrences);
}

TEST_CASE("frame lengths double from 8 and 12 and include the cap") {
  CHECK(rs_frame_lengths(512) ==
        std::vector<std::size_t>{8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512});
  CHECK(rs_frame_lengths(100) == std::vector<std::size_t>{8, 12, 16, 24, 32, 48, 64, 96, 100});
  CHECK(rs_frame_lengths(16) == std::vector<std::size_t>{8, 12, 16});
  CHECK(rs_frame_lengths(7).empty());
}

TEST_CASE("rescaled-range estimate agrees with the naive reference pipeline") {
  synthetic::Rng rng(802);
  for (int trial = 0; trial < 5; ++trial) {
    const auto walk = synthetic::gaussian_walk(rng, 3000);
    for (std::size_t cap : {std::size_t{100}, std::size_t{512}}) {
      CHECK(hurst_rs(walk, cap) ==
            doctest::Approx(oracles::hurst_rs(walk, cap)).epsilon(1e-9));
    }
  }
  synthetic::Rng rng2(803);
  const auto anti = synthetic::antipersistent_walk(rng2, 2000);
  CHECK(hurst_rs(anti, 256) == doctest::Approx(oracles::hurst_rs(anti, 256)).epsilon(1e-9));
}

TEST_CASE("independent increments estimate near one half") {
  double sum = 0.0;
  int count = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    synthetic::Rng rng(seed);
    sum += hurst_rs(synthetic::gaussian_walk(rng, 2000), 256);
    ++count;
  }
  const double mean = sum / count;
  CHECK(mean > 0.45);
  CHECK(mean < 0.60);
}

TEST_CASE("sign-alternating increments estimate far below one half") {
  synthetic::Rng rng(804);
  CHECK(hurst_rs(synthetic::antipersistent_walk(rng, 2000), 256) < 0.45);

  // Pure alternation, no noise at all.
  std::vector<double> b(1000);
  double acc = 0.0;
  for (std::size_t t = 0; t < b.size(); ++t) {
    acc += (t % 2 == 0) ? 1.0 : -1.0;
    b[t] = acc;
  }
  CHECK(hurst_rs(b, 128) < 0.2);
}

TEST_CASE("strongly trending increments estimate near one") {
  // AR(1) with coefficient 0.9: long memory pushes the estimate well above
  // one half.
  synthetic::Rng rng(805);
  std::vector<double> b(3000);
  double acc = 0.0, inc = 0.0;
  for (std::size_t t = 0; t < b.size(); ++t) {
    inc = 0.9 * inc + rng.gaussian();
    acc += inc;
    b[t] = acc;
  }
  CHECK(hurst_rs(b, 256) > 0.60);
}

TEST_CASE("the estimate is invariant under shifting and scaling the series") {
  synthetic::Rng rng(806);
  const auto walk = synthetic::gaussian_walk(rng, 1500);
  const double h = hurst_rs(walk, 256);

  auto scaled = walk;
  for (double& v : scaled) v *= 4.0;  // power of two: bit-exact scaling
  CHECK(hurst_rs(scaled, 256) == h);

  auto shifted = walk;
  for (double& v : shifted) v += 1000.0;
  CHECK(hurst_rs(shifted, 256) == doctest::Approx(h).epsilon(1e-6));
}

TEST_CASE("a flat series has no rescaled range") {
  std::vector<double> ramp(200);
  std::iota(ramp.begin(), ramp.end(), 0.0);  // increments all 1
  CHECK(code_of([&] { hurst_rs(ramp, 64); }) == ErrorCode::zero_variance);
}

TEST_CASE("hurst_rs validates frame cap and series length") {
  const std::vector<double> short_series(10, 1.0);
  CHECK(code_of([&] { hurst_rs(short_series, 15); }) == ErrorCode::series_too_short);
  CHECK(code_of([&] { hurst_rs(short_series, 64); }) == ErrorCode::series_too_short);
}

TEST_CASE("integer and gap-series overloads match the double overload") {
  synthetic::Rng rng(807);
  std::vector<std::int64_t> ints(800);
  for (auto& v : ints) v = static_cast<std::int64_t>(rng.uniform() * 50.0);
  const std::vector<double> doubles(ints.begin(), ints.end());
  const double h = hurst_rs(doubles, 128);
  CHECK(hurst_rs(ints, 128) == h);
  CHECK(hurst_rs(gap_series(ints), 128) == h);
}

TEST_CASE("sliding windows advance by step and end at 1-based positions") {
  synthetic::Rng rng(808);
  std::vector<std::int64_t> vals(1200);
  for (auto& v : vals) v = static_cast<std::int64_t>(rng.uniform() * 30.0);
  const auto g = gap_series(vals);
  const auto hs = hurst_distribution(g, 500, 100);
  CHECK(hs.window == 500);
  CHECK(hs.step == 100);
  REQUIRE(hs.points.size() == 8);  // (1200-500)/100 + 1
  for (std::size_t i = 0; i < hs.points.size(); ++i)
    CHECK(hs.points[i].t == 500 + 100 * i);

  // Each point is the plain estimate of exactly that window of gaps.
  for (const auto& p : hs.points) {
    const std::vector<double> win(vals.begin() + static_cast<std::ptrdiff_t>(p.t - 500),
                                  vals.begin() + static_cast<std::ptrdiff_t>(p.t));
    CHECK(p.h == hurst_rs(win, 500));
  }
}

TEST_CASE("windows with no variance are skipped, not fatal") {
  synthetic::Rng rng(809);
  std::vector<std::int64_t> vals;
  for (int i = 0; i < 300; ++i) vals.push_back(static_cast<std::int64_t>(rng.uniform() * 30.0));
  vals.insert(vals.end(), 250, 7);  // long constant run
  for (int i = 0; i < 300; ++i) vals.push_back(static_cast<std::int64_t>(rng.uniform() * 30.0));

  const auto hs = hurst_distribution(gap_series(vals), 100, 50);
  const std::size_t nominal = (vals.size() - 100) / 50 + 1;
  CHECK(hs.points.size() < nominal);
  CHECK(!hs.points.empty());
  for (const auto& p : hs.points) {
    CHECK(std::isfinite(p.h));
    // The skipped ends are exactly those whose window lies inside the run.
    const std::size_t begin = static_cast<std::size_t>(p.t) - 100;
    CHECK_FALSE((begin >= 300 && p.t <= 550));
  }
}

TEST_CASE("hurst_distribution validates window, step, and length") {
  const auto g = gap_series(std::vector<std::int64_t>(100, 3));
  CHECK(code_of([&] { hurst_distribution(g, 500, 100); }) == ErrorCode::series_too_short);
  CHECK(code_of([&] { hurst_distribution(g, 50, 0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { hurst_distribution(g, 10, 5); }) == ErrorCode::series_too_short);
}

TEST_CASE("the stream overload composes gap extraction with the sweep") {
  synthetic::Rng rng(810);
  const auto s = synthetic::sample_stream(rng, {0.5, 0.5}, 4000, "test");
  const auto direct = hurst_distribution(gaps(s, 0), 200, 50);
  const auto composed = hurst_distribution(s, 0, 200, 50);
  REQUIRE(direct.points.size() == composed.points.size());
  for (std::size_t i = 0; i < direct.points.size(); ++i) {
    CHECK(direct.points[i].t == composed.points[i].t);
    CHECK(direct.points[i].h == composed.points[i].h);
  }
}

TEST_CASE("histogram bins estimates into hundredths and clamps outliers") {
  HurstSeries hs;
  hs.window = 100;
  hs.step = 10;
  for (double h : {0.004, 0.015, 0.5, 0.995, -0.3, 1.7}) hs.points.push_back({100, h});
  const auto hist = hurst_histogram(hs);
  REQUIRE(hist.counts.size() == 100);
  CHECK(hist.bin_width == 0.01);
  CHECK(hist.counts[0] == 2);   // 0.004 plus the clamped -0.3
  CHECK(hist.counts[1] == 1);   // 0.015
  CHECK(hist.counts[50] == 1);  // 0.5
  CHECK(hist.counts[99] == 2);  // 0.995 plus the clamped 1.7
  CHECK(std::accumulate(hist.counts.begin(), hist.counts.end(), std::int64_t{0}) == 6);
}

TEST_CASE("histogram of an antipersistent gap series sits below one half") {
  std::vector<std::int64_t> vals(900);
  synthetic::Rng rng(811);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double jitter = rng.uniform() * 3.0;
    vals[i] = (i % 2 == 0 ? 2 : 9) + static_cast<std::int64_t>(jitter);
  }
  const auto hs = hurst_distribution(gap_series(vals), 200, 50);
  REQUIRE(!hs.points.empty());
  const auto hist = hurst_histogram(hs);
  std::int64_t below = 0, total = 0;
  for (std::size_t b = 0; b < hist.counts.size(); ++b) {
    total += hist.counts[b];
    if (b < 45) below += hist.counts[b];
  }
  CHECK(total == static_cast<std::int64_t>(hs.points.size()));
  CHECK(below == total);
}
