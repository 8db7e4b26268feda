#pragma once

// Simple undirected graphs on vertices 0..n-1, stored as one adjacency bitset
// per row, plus the traversal, net, switching and subdivision primitives the
// rest of the library is built on. Traversals break ties by smallest index.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "eqlines/matrix.hpp"

namespace eqlines {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

enum class EdgeType { plain, type_i, type_ii };

std::string_view to_string(EdgeType t);
EdgeType parse_edge_type(std::string_view s);  // throws std::invalid_argument

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  // Sorted lexicographically, each edge as (u, v) with u < v.
  std::vector<Edge> edges() const;

  // Adding an existing edge is a no-op (its label is overwritten when typed).
  void add_edge(Vertex u, Vertex v);
  void add_edge(Vertex u, Vertex v, EdgeType type);
  void remove_edge(Vertex u, Vertex v);

  // A typed graph carries a label on every edge; untyped edges read as plain.
  bool typed() const { return typed_; }
  EdgeType edge_type(Vertex u, Vertex v) const;
  std::vector<Edge> edges_of_type(EdgeType t) const;
  void drop_edge_types();
  // Labels every current edge plain and keeps the graph typed from now on.
  void make_typed();

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row_bits(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }

  Matrix adjacency_matrix() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(Vertex v) const;
  void set_bit(Vertex u, Vertex v, bool on);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
  bool typed_ = false;
  std::map<Edge, EdgeType> labels_;
};

enum class NamedGraph { complete, path, cycle, empty, star };

NamedGraph parse_named_graph(std::string_view s);

// star_k is K_{1,k-1} with the center at vertex 0.
Graph build_named(NamedGraph kind, std::size_t k);

Graph disjoint_union(std::span<const Graph> parts);

// Replaces each edge labeled `selector` (every edge when the graph is untyped
// and selector is plain) by a path with `length` edges. Fresh vertices are
// appended in sorted-edge order; path edges inherit the selector label.
Graph subdivide_edges(const Graph& g, EdgeType selector, std::size_t length);

/// An induced subgraph together with the host vertex behind each local vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> host;  // ascending
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

// B(v, r): the subgraph induced by vertices within distance r of v.
Subgraph ball(const Graph& g, Vertex v, std::size_t r);

// BFS distances from v; kUnreachable for other components.
std::vector<std::size_t> distances(const Graph& g, Vertex v);

struct SpanningTree {
  Vertex root = 0;
  std::vector<Vertex> parent;      // parent[root] == root; kUnreachable outside the component
  std::vector<std::size_t> depth;  // kUnreachable outside the component
  std::vector<Vertex> order;       // BFS order
};

SpanningTree spanning_tree(const Graph& g, Vertex root);

// A graph with no vertices is reported as not connected.
bool is_connected(const Graph& g);
std::size_t max_degree(const Graph& g);

// Components ordered by their smallest vertex; each component sorted.
std::vector<std::vector<Vertex>> components(const Graph& g);

struct NetCertificate {
  std::size_t radius = 0;
  std::vector<Vertex> members;  // in the order the algorithm picked them
};

// r-net by pruning a BFS spanning tree: take a deepest vertex, walk r steps
// toward the root, add that vertex, drop its subtree; finish with the root.
// At most ceil(n / (r + 1)) members. Throws on disconnected input.
NetCertificate r_net(const Graph& g, std::size_t r, Vertex root = 0);

// Every vertex within distance `radius` of some member.
bool covers(const Graph& g, const NetCertificate& net);

inline std::size_t net_size_bound(std::size_t n, std::size_t r) { return (n + r) / (r + 1); }

// Complements every pair with exactly one endpoint in s. The result is untyped.
Graph switch_set(const Graph& g, std::span<const Vertex> s);
Graph switch_set(const Graph& g, const std::vector<bool>& in_set);

// Random connected graph: a random tree under the degree cap, then extra
// random edges accepted with probability `density` while the cap allows.
Graph random_connected_graph(std::size_t n, std::size_t max_degree, double density,
                             std::mt19937_64& rng);

}  // namespace eqlines
