#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "eqlines/spectra.hpp"
#include "eqlines/switching.hpp"
#include "fixtures.hpp"

namespace {

using namespace eqlines;
using eqlines::testing::complete;
using eqlines::testing::copies;
using eqlines::testing::triangle;

Graph with_isolated(const Graph& g, std::size_t h) {
  std::vector<Graph> parts{g};
  parts.insert(parts.end(), h, Graph(1));
  return disjoint_union(parts);
}

TEST(CliqueBound, Examples) {
  EXPECT_TRUE(clique_bound_check(complete(4), 1.0 / 3).ok);
  const CliqueCheck bad = clique_bound_check(complete(5), 1.0 / 3);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.limit, 4u);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->size(), 5u);
  EXPECT_TRUE(clique_bound_check(triangle(), 0.2).ok);
  EXPECT_THROW(clique_bound_check(triangle(), 0.0), std::invalid_argument);
}

TEST(Type2, Examples) {
  for (std::size_t t = 1; t <= 4; ++t) {
    const Graph g = with_isolated(build_named(NamedGraph::star, t + 1), t);
    const Type2Result r = type2_search(g, t);
    ASSERT_TRUE(r.witness.has_value()) << t;
    const auto& w = *r.witness;
    EXPECT_EQ(w.a.size(), t);
    EXPECT_EQ(w.b.size(), t);
    for (Vertex a : w.a) {
      EXPECT_TRUE(g.adjacent(w.u, a));
      for (Vertex b : w.b) EXPECT_FALSE(g.adjacent(a, b));
    }
    for (Vertex b : w.b) EXPECT_FALSE(g.adjacent(w.u, b));
  }
  EXPECT_FALSE(type2_search(complete(8), 1).witness.has_value());
  const Type2Result tri = type2_search(with_isolated(copies(triangle(), 2), 3), 2);
  EXPECT_FALSE(tri.witness.has_value());
  EXPECT_TRUE(tri.exhaustive);
  EXPECT_THROW(type2_search(triangle(), 0), std::invalid_argument);
}

TEST(Type2, ConstructionFamiliesAreClean) {
  for (long q : {3, 5, 7}) {
    for (std::size_t d = (q + 1) / 2; d <= 30; ++d) {
      const Construction c = construct_optimal(AlgebraicReal::from_rational(Rational(1, q)), d);
      EXPECT_TRUE(clique_bound_check(c.graph, c.family.alpha).ok);
      const Type2Result r = type2_search(c.graph, 10);
      EXPECT_FALSE(r.witness.has_value());
      EXPECT_TRUE(r.exhaustive);
    }
  }
}

TEST(GreedySwitch, Examples) {
  const SwitchResult one = greedy_switch_bounded(Graph(1));
  EXPECT_EQ(one.signs.signs, (std::vector<int>{1}));
  EXPECT_EQ(one.max_degree_after, 0u);

  const Graph base = copies(triangle(), 5);
  const SwitchResult same = greedy_switch_bounded(base);
  EXPECT_EQ(same.signs.signs, std::vector<int>(15, 1));
  EXPECT_EQ(same.switched, base);

  std::mt19937_64 rng(11);
  std::vector<Vertex> order(15);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::vector<Vertex> flip(order.begin(), order.begin() + 7);
  const Graph planted = switch_set(base, flip);
  const SwitchResult r = greedy_switch_bounded(planted);
  EXPECT_EQ(r.max_degree_after, 2u);
  EXPECT_EQ(switch_set(planted, r.signs.negated()), r.switched);
  EXPECT_EQ(r.signs.signs[0], 1);
}

TEST(GreedySwitch, PlantedRecovery) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(k, 30)(rng);
    const std::size_t ell = (d - 1) / (k - 1), h = (d - 1) - (k - 1) * ell;
    const Graph base = with_isolated(copies(complete(k), ell), h);
    const std::size_t n = base.order();
    std::vector<bool> flip(n, false);
    std::bernoulli_distribution coin(0.25);
    for (std::size_t v = 0; v < n; ++v) flip[v] = coin(rng);
    const Graph planted = switch_set(base, flip);
    const SwitchResult r = greedy_switch_bounded(planted);
    EXPECT_LE(r.max_degree_after, max_degree(base)) << trial;
    EXPECT_EQ(switch_set(planted, r.signs.negated()), r.switched);
  }
}

TEST(Flip, GramAndNegativeGraphConsistency) {
  const Construction c = construct_optimal(AlgebraicReal::from_rational(Rational(1, 5)), 11);
  std::mt19937_64 rng(5);
  SignAssignment s = SignAssignment::identity(c.family.size());
  for (int& x : s.signs) x = std::bernoulli_distribution(0.5)(rng) ? -1 : 1;
  const LineFamily flipped = flip_signs(c.family, s);
  EXPECT_EQ(negative_graph(flipped), switch_set(c.graph, s.negated()));
  const Matrix m = gram_from_graph(c.graph, c.family.alpha);
  const Matrix dm = signed_gram(m, s);
  EXPECT_EQ(dm, gram_from_graph(negative_graph(flipped), c.family.alpha));
  const Spectrum a = eigen_sym(m), b = eigen_sym(dm);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-8);
  EXPECT_EQ(psd_rank(m).rank, psd_rank(dm).rank);
  EXPECT_TRUE(verify_family(flipped).valid);
  // one line at a time
  for (std::size_t i = 0; i < c.family.size(); ++i) {
    SignAssignment single = SignAssignment::identity(c.family.size());
    single.signs[i] = -1;
    const Vertex v[] = {i};
    EXPECT_EQ(negative_graph(flip_signs(c.family, single)), switch_set(c.graph, v));
  }
}

}  // namespace
