#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eqlines/mult_bound.hpp"
#include "eqlines/spectra.hpp"
#include "fixtures.hpp"

namespace {

using namespace eqlines;
using eqlines::testing::complete;
using eqlines::testing::copies;
using eqlines::testing::k2;
using eqlines::testing::path;
using eqlines::testing::random_connected;
using eqlines::testing::star;
using eqlines::testing::triangle;

std::size_t mult_of(const Graph& g, double lam) { return multiplicity(graph_spectrum(g), lam, 1e-8); }

TEST(DefaultParams, Examples) {
  const MultParams e = default_params(static_cast<std::size_t>(std::exp(std::exp(1.0))), 4, 1.0);
  // n is truncated to 15, and ln 15 ~ 2.71 still rounds up to 3
  EXPECT_EQ(e.r, 1u);
  EXPECT_EQ(e.s, 3u);
  const MultParams small = default_params(3, 4);
  EXPECT_EQ(small.r, 1u);
  EXPECT_EQ(small.s, 1u);
  const MultParams big = default_params(10000, 4);
  EXPECT_GE(big.s, big.r);
  EXPECT_GE(big.r, 1u);
  EXPECT_NEAR(big.c, 1.0 / (4.0 * std::log(5.0)), 1e-15);
  EXPECT_THROW(default_params(100, 4, -1.0), std::invalid_argument);
}

TEST(HighRadius, Examples) {
  EXPECT_TRUE(high_radius_vertices(complete(4), 3.0, 1).empty());
  EXPECT_EQ(high_radius_vertices(complete(4), 2.5, 1).size(), 4u);
  EXPECT_TRUE(high_radius_vertices(path(40), 2.0, 3).empty());
  // star with 4 leaves: radius 2 everywhere once the ball reaches the centre
  EXPECT_EQ(high_radius_vertices(star(4), 1.9, 1).size(), 5u);
}

TEST(HighRadius, ThreadsAgree) {
  for (const Graph& g : random_connected(10, 20, 50, 5, 71)) {
    const double lam = lambda2(g);
    EXPECT_EQ(high_radius_vertices(g, lam, 2, 1), high_radius_vertices(g, lam, 2, 4));
  }
}

TEST(ClusterDistance, Examples) {
  EXPECT_TRUE(cluster_distance_check(complete(4), 1));
  EXPECT_TRUE(cluster_distance_check(star(5), 0));
  // endpoint balls are P_{s+2} with radius 2cos(pi/(s+3)) > 2cos(2pi/(2s+5)) = lambda_2
  for (std::size_t s = 0; s <= 4; ++s) {
    EXPECT_FALSE(cluster_distance_check(path(2 * s + 4), s)) << s;
    EXPECT_EQ(high_radius_spread(path(2 * s + 4), s), 2 * s + 3) << s;
  }
}

TEST(ClusterDistance, RandomSpreadWithinDisjointBallLimit) {
  for (const Graph& g : random_connected(100, 8, 40, 5, 2024))
    for (std::size_t s = 0; s <= 2; ++s) EXPECT_LE(high_radius_spread(g, s), 2 * s + 3);
}

TEST(NetRemoval, Examples) {
  EXPECT_TRUE(net_removal_radius_check(path(5), 1));
  EXPECT_TRUE(net_removal_radius_check(k2(), 1));
  EXPECT_TRUE(net_removal_radius_check(triangle(), 1));
  EXPECT_TRUE(net_removal_radius_check(Graph(1), 1));
}

TEST(NetRemoval, RandomSweep) {
  for (const Graph& g : random_connected(120, 2, 60, 6, 99))
    for (std::size_t r = 1; r <= 3; ++r) EXPECT_TRUE(net_removal_radius_check(g, r)) << g.order() << " r=" << r;
}

TEST(LocalGlobal, Examples) {
  EXPECT_TRUE(local_global_check(k2(), 1));
  EXPECT_TRUE(local_global_check(triangle(), 1));
  EXPECT_THROW(local_global_check(triangle(), 0), std::invalid_argument);
  for (const Graph& g : random_connected(60, 3, 25, 6, 5))
    for (std::size_t s = 1; s <= 4; ++s) EXPECT_TRUE(local_global_check(g, s));
}

TEST(Fixtures, Shapes) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const Graph c = comb_fixture(m);
    const Graph k = k33_chain_fixture(m);
    EXPECT_EQ(c.order(), 3 * m);
    EXPECT_EQ(k.order(), 7 * m);
    EXPECT_TRUE(is_connected(c));
    EXPECT_TRUE(is_connected(k));
    EXPECT_LE(max_degree(c), 4u);
    EXPECT_LE(max_degree(k), 4u);
    EXPECT_GE(mult_of(c, 0.0), m);
    EXPECT_GE(mult_of(k, -3.0), m);
  }
  EXPECT_EQ(mult_of(comb_fixture(1), 0.0), 1u);
  EXPECT_THROW(comb_fixture(0), std::invalid_argument);
  EXPECT_THROW(k33_chain_fixture(0), std::invalid_argument);
}

TEST(Certified, Examples) {
  const MultiplicityBound b = certified_mult_upper(k2(), 1.0, 1, 1);
  EXPECT_GE(b.bound, 1u);
  ASSERT_TRUE(b.measured.has_value());
  EXPECT_EQ(*b.measured, 1u);
  EXPECT_TRUE(b.sound);
  EXPECT_EQ(b.bound, b.removed_high.size() + b.removed_net.size() + static_cast<std::size_t>(std::floor(b.trace_term)));

  EXPECT_THROW(certified_mult_upper(k2(), 0.0, 1, 1), std::invalid_argument);
  EXPECT_THROW(certified_mult_upper(k2(), 1.0, 0, 1), std::invalid_argument);
  EXPECT_THROW(certified_mult_upper(copies(k2(), 2), 1.0, 1, 1), std::invalid_argument);

  const MultiplicityBound t = certified_mult_upper_components(copies(triangle(), 5), 2.0, 1, 1);
  ASSERT_TRUE(t.measured.has_value());
  EXPECT_EQ(*t.measured, 5u);
  EXPECT_GE(t.bound, 5u);
}

TEST(Certified, FixturesSound) {
  for (std::size_t m = 1; m <= 8; ++m)
    for (const Graph& g : {comb_fixture(m), k33_chain_fixture(m)}) {
      const double lam = lambda2(g);
      if (!(lam > 0.0)) continue;
      for (std::size_t r = 1; r <= 2; ++r)
        for (std::size_t s = r; s <= 3; ++s) {
          const MultiplicityBound b = certified_mult_upper(g, lam, r, s);
          EXPECT_TRUE(b.sound) << m << " " << b.bound << " < " << *b.measured;
        }
    }
}

TEST(Certified, RandomSound) {
  std::size_t n = 0;
  for (const Graph& g : random_connected(60, 4, 40, 5, 17)) {
    const double lam = lambda2(g);
    if (!(lam > 0.0)) continue;
    const MultiplicityBound b = certified_mult_upper(g, lam, 1 + n % 2, 1 + n % 3);
    EXPECT_TRUE(b.sound);
    EXPECT_GE(b.trace_term, 0.0);
    ++n;
  }
  EXPECT_GT(n, 40u);
}

TEST(Certified, ThreadsIdentical) {
  const Graph g = k33_chain_fixture(6);
  const double lam = lambda2(g);
  MultBoundOptions one, many;
  many.threads = 4;
  const MultiplicityBound a = certified_mult_upper(g, lam, 1, 2, one);
  const MultiplicityBound b = certified_mult_upper(g, lam, 1, 2, many);
  EXPECT_EQ(a.bound, b.bound);
  EXPECT_EQ(a.trace_term, b.trace_term);
  EXPECT_EQ(a.removed_net, b.removed_net);
}

TEST(Certified, GridMinimum) {
  const Graph g = comb_fixture(8);
  const double lam = lambda2(g);
  const MultiplicityBound best = best_certified_mult_upper(g, lam, {1, 2}, {1, 2, 3});
  for (std::size_t r : {1, 2})
    for (std::size_t s : {1, 2, 3}) EXPECT_LE(best.bound, certified_mult_upper(g, lam, r, s).bound);
  EXPECT_TRUE(best.sound);
}

TEST(Certified, TraceMonotoneBelowLambda) {
  // all local radii of a long path are below 2
  const Graph g = path(30);
  double prev = INFINITY;
  for (std::size_t s = 1; s <= 6; ++s) {
    const MultiplicityBound b = certified_mult_upper(g, 2.0, 1, s);
    EXPECT_TRUE(b.removed_high.empty());
    EXPECT_LE(b.trace_term, prev + 1e-9);
    prev = b.trace_term;
  }
}

TEST(Interlacing, VertexSubsets) {
  std::mt19937_64 rng(8);
  for (const Graph& g : random_connected(40, 6, 30, 5, 23)) {
    const Spectrum spec = graph_spectrum(g);
    const double lam = spec.values[std::uniform_int_distribution<std::size_t>(0, g.order() - 1)(rng)];
    std::vector<Vertex> u;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 4 == 0) u.push_back(v);
    const Graph h = remove_vertices(g, u).graph;
    const std::size_t mh = h.order() == 0 ? 0 : mult_of(h, lam);
    EXPECT_LE(mult_of(g, lam), mh + u.size());
  }
}

TEST(MultBoundJson, Fields) {
  const nlohmann::json j = mult_bound_to_json(certified_mult_upper(path(6), 1.0, 1, 1));
  for (const char* key : {"lambda", "r", "s", "removed_high", "removed_net", "trace_term", "bound", "measured",
                          "closed_form", "sound", "survivors"})
    EXPECT_TRUE(j.contains(key)) << key;
}

}  // namespace
