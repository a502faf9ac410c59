#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shortcycle/cayley.hpp"
#include "shortcycle/report_json.hpp"
#include "shortcycle/verifier.hpp"

using namespace shortcycle;
using namespace shortcycle::verify;

TEST(Masks, RoundTrip) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1))); m += 7) {
      const auto g = graph_from_mask(n, m);
      for (std::size_t v = 0; v < n; ++v) EXPECT_FALSE(g.has_edge(v, v));
      EXPECT_EQ(mask_from_graph(g), m);
    }
  }
}

TEST(Exhaustive, SmallCases) {
  const auto r31 = exhaustive_ch(3, 1);
  EXPECT_EQ(r31.scanned, 64u);
  EXPECT_TRUE(r31.complete());
  EXPECT_TRUE(r31.violations.empty());
  // Each vertex picks a non-empty subset of the other two.
  EXPECT_EQ(r31.checked, 27u);

  const auto r42 = exhaustive_ch(4, 2);
  EXPECT_TRUE(r42.violations.empty());
  ASSERT_TRUE(r42.extremal);
  EXPECT_EQ(r42.extremal->girth, 2u);
  EXPECT_EQ(r42.extremal->bound, 2u);
}

TEST(Exhaustive, CountsMatchBruteForce) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t r = 1; r < n; ++r) {
      const auto rep = exhaustive_ch(n, r);
      std::uint64_t checked = 0, tight = 0;
      const std::size_t bound = ch_bound(n, r);
      for (std::uint64_t m = 0; m < rep.total; ++m) {
        const auto g = graph_from_mask(n, m).to_digraph();
        if (min_outdegree(g) < r) continue;
        ++checked;
        const auto gl = oracle::girth(g);
        ASSERT_TRUE(gl);
        ASSERT_LE(*gl, bound);
        tight += *gl == bound;
      }
      EXPECT_EQ(rep.checked, checked);
      EXPECT_EQ(rep.tight_count, tight);
    }
  }
}

TEST(Exhaustive, CirculantIsTightAtFiveTwo) {
  const auto c = cayley::circulant_extremal(5, 2);
  const auto mask = mask_from_graph(DenseDigraph::from_digraph(cayley::build(c.spec)));
  auto rep = exhaustive_ch(5, 2, ScanOptions{1, mask});
  const auto before = rep.tight_count;
  rep = resume_exhaustive(rep, ScanOptions{1, mask + 1});
  EXPECT_EQ(rep.tight_count, before + 1);
  EXPECT_EQ(rep.checkpoint, mask + 1);
}

TEST(Exhaustive, ResumeAndWorkersAgree) {
  const auto full = exhaustive_ch(4, 1);
  const auto half = exhaustive_ch(4, 1, ScanOptions{1, full.total / 2});
  EXPECT_FALSE(half.complete());
  const auto json = to_json(half).dump();
  const auto resumed = resume_exhaustive(report_from_json(Json::parse(json)));
  EXPECT_EQ(resumed, full);
  EXPECT_EQ(to_json(resumed).dump(), to_json(full).dump());
  EXPECT_EQ(exhaustive_ch(4, 1, ScanOptions{3, std::nullopt}), full);
}

TEST(Exhaustive, Rejections) {
  EXPECT_THROW(exhaustive_ch(6, 2), Error);
  EXPECT_THROW(exhaustive_ch(4, 0), Error);
  EXPECT_THROW(exhaustive_ch(4, 5), Error);
  EXPECT_THROW(report_from_json(Json::parse(R"({"mode":"exhaustive"})")), Error);
}

TEST(Sampled, DeterministicAndClean) {
  const auto a = sampled_ch(20, 4, 10000, 42);
  const auto b = sampled_ch(20, 4, 10000, 42, 4);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_TRUE(a.violations.empty());
  EXPECT_EQ(a.checked, 10000u);
  EXPECT_NE(to_json(sampled_ch(20, 4, 100, 43)).dump(), to_json(sampled_ch(20, 4, 100, 42)).dump());
  EXPECT_TRUE(sampled_ch(30, 1, 200, 1).violations.empty());
}

TEST(Sampled, MinimumOutdegreeHonoured) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto g = sample_min_outdegree_graph(15, 5, 9, i);
    EXPECT_GE(g.min_outdegree(), 5u);
    for (std::size_t v = 0; v < 15; ++v) EXPECT_FALSE(g.has_edge(v, v));
  }
}

TEST(Digon, Examples) {
  EXPECT_TRUE(digon_check(oracle::complete_graph(5)));
  EXPECT_TRUE(digon_check(oracle::circulant(4, {1, 2})));
  EXPECT_EQ(oracle::girth(oracle::circulant(4, {1, 2})), 2u);
  EXPECT_TRUE(digon_check(oracle::complete_graph(2)));
  EXPECT_THROW(digon_check(oracle::cycle_graph(4)), Error);
}

TEST(Triangle, Constants) {
  EXPECT_NEAR(triangle_constant(), 0.381966, 1e-6);
  EXPECT_NEAR(bondy_constant(), 0.3798, 1e-4);
  EXPECT_NEAR(shen_triangle_constant(), 0.3542, 1e-4);
  EXPECT_EQ(triangle_threshold_outdegree(13), 5u);
  // Exact threshold agrees with long-double evaluation away from ties.
  for (std::size_t n = 1; n <= 2000; ++n) {
    const long double x = (3.0L - std::sqrt(5.0L)) / 2.0L * static_cast<long double>(n);
    EXPECT_EQ(triangle_threshold_outdegree(n), static_cast<std::size_t>(std::ceil(x))) << n;
  }
}

TEST(Triangle, OrientedSamples) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const std::size_t n = 10 + i % 11;
    const std::size_t k = triangle_threshold_outdegree(n);
    const auto g = sample_oriented_graph(n, k, 5, i);
    EXPECT_GE(g.min_outdegree(), k);
    const auto d = g.to_digraph();
    EXPECT_FALSE(has_loop(d));
    EXPECT_FALSE(has_digon(d));
  }
  const auto rep = triangle_threshold_check(13, 2000, 7);
  EXPECT_EQ(rep.r, 5u);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(to_json(rep).dump(), to_json(triangle_threshold_check(13, 2000, 7, 3)).dump());
}
