#include <gtest/gtest.h>

#include <random>

#include "eqlines/graph.hpp"
#include "eqlines/graph_io.hpp"
#include "fixtures.hpp"

namespace {

using namespace eqlines;
using eqlines::testing::complete;
using eqlines::testing::path;
using eqlines::testing::star;
using eqlines::testing::triangle;

TEST(BuildNamed, Examples) {
  const Graph t = triangle();
  EXPECT_EQ(t.order(), 3u);
  EXPECT_EQ(t.edge_count(), 3u);
  const Graph p1 = path(1);
  EXPECT_EQ(p1.order(), 1u);
  EXPECT_EQ(p1.edge_count(), 0u);
  const Graph p3 = path(3);
  EXPECT_EQ(p3.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(complete(6).edge_count(), 15u);
  EXPECT_EQ(build_named(NamedGraph::empty, 4).edge_count(), 0u);
  EXPECT_EQ(build_named(NamedGraph::cycle, 5).edge_count(), 5u);
}

TEST(BuildNamed, RejectsZero) {
  EXPECT_THROW(build_named(NamedGraph::complete, 0), std::invalid_argument);
  EXPECT_THROW(parse_named_graph("petersen"), std::invalid_argument);
}

TEST(DisjointUnion, Examples) {
  const Graph two[] = {triangle(), triangle()};
  const Graph g = disjoint_union(two);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(components(g).size(), 2u);
  EXPECT_FALSE(g.adjacent(2, 3));

  EXPECT_EQ(disjoint_union(std::span<const Graph>{}).order(), 0u);

  const Graph parts[] = {triangle(), triangle(), build_named(NamedGraph::empty, 1)};
  const Graph c = disjoint_union(parts);
  EXPECT_EQ(c.order(), 7u);
  EXPECT_EQ(c.edge_count(), 6u);
  EXPECT_EQ(c.degree(6), 0u);
}

TEST(Subdivide, IdentityAndPath) {
  const Graph e = complete(2);
  EXPECT_EQ(subdivide_edges(e, EdgeType::plain, 1), e);
  const Graph p = subdivide_edges(e, EdgeType::plain, 3);
  EXPECT_EQ(p.order(), 4u);
  EXPECT_EQ(p.edge_count(), 3u);
  EXPECT_EQ(max_degree(p), 2u);
  EXPECT_TRUE(is_connected(p));
  EXPECT_EQ(p.degree(0), 1u);
  EXPECT_EQ(p.degree(1), 1u);
  EXPECT_THROW(subdivide_edges(e, EdgeType::plain, 0), std::invalid_argument);
}

TEST(Subdivide, OnlySelectedLabel) {
  Graph g(3);
  g.add_edge(0, 1, EdgeType::type_i);
  g.add_edge(1, 2, EdgeType::type_ii);
  const Graph s = subdivide_edges(g, EdgeType::type_ii, 4);
  EXPECT_EQ(s.order(), 6u);
  EXPECT_EQ(s.edges_of_type(EdgeType::type_i).size(), 1u);
  EXPECT_EQ(s.edges_of_type(EdgeType::type_ii).size(), 4u);
  for (Vertex v = 3; v < 6; ++v) EXPECT_EQ(s.degree(v), 2u);
  EXPECT_EQ(subdivide_edges(g, EdgeType::type_i, 1), g);
  EXPECT_THROW(parse_edge_type("type_iii"), std::invalid_argument);
}

TEST(Ball, Examples) {
  const Graph p5 = path(5);
  EXPECT_EQ(ball(p5, 3, 0).graph.order(), 1u);
  const Subgraph b = ball(p5, 2, 1);
  EXPECT_EQ(b.graph, path(3));
  EXPECT_EQ(b.host, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(ball(triangle(), 1, 1).graph, triangle());
  EXPECT_THROW(ball(p5, 5, 1), std::out_of_range);
}

TEST(Ball, DiameterRadiusGivesComponent) {
  const Graph parts[] = {path(4), triangle()};
  const Graph g = disjoint_union(parts);
  EXPECT_EQ(ball(g, 1, 3).host, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(ball(g, 5, 1).host, (std::vector<Vertex>{4, 5, 6}));
}

// Hand trace of the pruning algorithm on P5 rooted at 0, r = 1:
// deepest 4 -> walk to 3, drop {3,4}; deepest 2 -> walk to 1, drop {1,2}; root 0.
TEST(RNet, PathHandTrace) {
  const NetCertificate net = r_net(path(5), 1);
  EXPECT_EQ(net.members, (std::vector<Vertex>{3, 1, 0}));
  EXPECT_LE(net.members.size(), net_size_bound(5, 1));
  EXPECT_TRUE(covers(path(5), net));
}

TEST(RNet, SingleVertexAndStar) {
  EXPECT_EQ(r_net(path(1), 3).members, (std::vector<Vertex>{0}));
  EXPECT_EQ(r_net(star(6), 1).members, (std::vector<Vertex>{0}));
  // Rooted at a leaf the deepest leaf walks one step to the center.
  const NetCertificate from_leaf = r_net(star(6), 1, 2);
  EXPECT_EQ(from_leaf.members.front(), 0u);
  EXPECT_LE(from_leaf.members.size(), 2u);
  EXPECT_TRUE(covers(star(6), from_leaf));
}

TEST(RNet, RejectsDisconnected) {
  EXPECT_THROW(r_net(build_named(NamedGraph::empty, 2), 1), std::invalid_argument);
  EXPECT_THROW(r_net(path(3), 0), std::invalid_argument);
}

TEST(RNet, SizeBoundAndCoverageOnRandomGraphs) {
  const auto graphs = eqlines::testing::random_connected(150, 1, 60, 6, 2024);
  for (const auto& g : graphs) {
    for (std::size_t r = 1; r <= 4; ++r) {
      for (Vertex root : {Vertex{0}, g.order() - 1}) {
        const NetCertificate net = r_net(g, r, root);
        EXPECT_LE(net.members.size(), net_size_bound(g.order(), r));
        EXPECT_TRUE(covers(g, net));
      }
    }
  }
}

TEST(SwitchSet, Examples) {
  const Graph t = triangle();
  EXPECT_EQ(switch_set(t, std::vector<Vertex>{}), t);
  const Graph e = complete(2);
  const Vertex one[] = {0};
  EXPECT_EQ(switch_set(e, one).edge_count(), 0u);
  const Graph s = switch_set(t, one);
  EXPECT_EQ(s.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(SwitchSet, InvolutionAndComplementProperty) {
  std::mt19937_64 rng(99);
  const auto graphs = eqlines::testing::random_connected(60, 1, 30, 8, 5);
  for (const auto& g : graphs) {
    std::vector<bool> s(g.order()), comp(g.order());
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < g.order(); ++i) {
      s[i] = coin(rng);
      comp[i] = !s[i];
    }
    const Graph once = switch_set(g, s);
    EXPECT_EQ(switch_set(once, s), g);
    EXPECT_EQ(once, switch_set(g, comp));
    EXPECT_EQ(switch_set(g, std::vector<bool>(g.order(), true)), g);
  }
}

TEST(Traversal, Basics) {
  const Graph p3 = path(3);
  EXPECT_TRUE(is_connected(p3));
  EXPECT_EQ(max_degree(p3), 2u);
  EXPECT_EQ(components(p3).size(), 1u);

  const Graph matching = eqlines::testing::copies(complete(2), 5);
  EXPECT_EQ(components(matching).size(), 5u);
  EXPECT_FALSE(is_connected(matching));

  EXPECT_EQ(components(Graph(0)).size(), 0u);

  const SpanningTree t = spanning_tree(path(4), 0);
  EXPECT_EQ(t.parent, (std::vector<Vertex>{0, 0, 1, 2}));
  EXPECT_EQ(t.depth, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(distances(path(4), 3), (std::vector<std::size_t>{3, 2, 1, 0}));
}

TEST(GraphJson, RoundTripIsBitExact) {
  Graph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const std::string text = write_graph_json(g);
  EXPECT_EQ(text, R"({"edges":[[0,1],[1,2],[2,3]],"n":4})");
  EXPECT_EQ(read_graph_json(text), g);
  EXPECT_EQ(write_graph_json(read_graph_json(text)), text);

  Graph typed(3);
  typed.add_edge(0, 1, EdgeType::type_i);
  typed.add_edge(1, 2, EdgeType::type_ii);
  const std::string ttext = write_graph_json(typed);
  EXPECT_EQ(read_graph_json(ttext), typed);
  EXPECT_EQ(write_graph_json(read_graph_json(ttext)), ttext);
}

TEST(GraphJson, RandomRoundTrip) {
  for (const auto& g : eqlines::testing::random_connected(30, 1, 40, 5, 17)) {
    const std::string text = write_graph_json(g);
    EXPECT_EQ(write_graph_json(read_graph_json(text)), text);
  }
}

TEST(GraphJson, RejectsMalformed) {
  EXPECT_THROW(read_graph_json("{"), std::invalid_argument);
  EXPECT_THROW(read_graph_json(R"({"n":2,"edges":[[0,2]]})"), std::invalid_argument);
  EXPECT_THROW(read_graph_json(R"({"n":2,"edges":[[1,1]]})"), std::invalid_argument);
  EXPECT_THROW(read_graph_json(R"({"n":2,"edges":[[0,1]],"edge_types":[]})"), std::invalid_argument);
  EXPECT_THROW(read_graph_json(R"({"n":2,"edges":[[0,1]],"edge_types":[[0,1,"weird"]]})"),
               std::invalid_argument);
}

}  // namespace
