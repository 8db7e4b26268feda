#include "eqlines/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eqlines {

std::string_view to_string(EdgeType t) {
  switch (t) {
    case EdgeType::plain: return "plain";
    case EdgeType::type_i: return "type_i";
    case EdgeType::type_ii: return "type_ii";
  }
  return "plain";
}

EdgeType parse_edge_type(std::string_view s) {
  if (s == "plain") return EdgeType::plain;
  if (s == "type_i") return EdgeType::type_i;
  if (s == "type_ii") return EdgeType::type_ii;
  throw std::invalid_argument("unknown edge type label: " + std::string(s));
}

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
  }
}

void Graph::set_bit(Vertex u, Vertex v, bool on) {
  const std::uint64_t mask = std::uint64_t{1} << (v % 64);
  if (on)
    bits_[u * words_ + v / 64] |= mask;
  else
    bits_[u * words_ + v / 64] &= ~mask;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (auto w : row_bits(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  const auto row = row_bits(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  add_edge(u, v, EdgeType::plain);
  if (!typed_) labels_.clear();
}

void Graph::add_edge(Vertex u, Vertex v, EdgeType type) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (!adjacent(u, v)) {
    set_bit(u, v, true);
    set_bit(v, u, true);
    ++edges_;
  }
  const Edge e{std::min(u, v), std::max(u, v)};
  if (type != EdgeType::plain) make_typed();
  if (typed_) labels_[e] = type;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) return;
  set_bit(u, v, false);
  set_bit(v, u, false);
  --edges_;
  labels_.erase(Edge{std::min(u, v), std::max(u, v)});
}

EdgeType Graph::edge_type(Vertex u, Vertex v) const {
  if (!adjacent(u, v)) throw std::invalid_argument("edge_type: not an edge");
  if (!typed_) return EdgeType::plain;
  return labels_.at(Edge{std::min(u, v), std::max(u, v)});
}

std::vector<Edge> Graph::edges_of_type(EdgeType t) const {
  if (!typed_) return t == EdgeType::plain ? edges() : std::vector<Edge>{};
  std::vector<Edge> out;
  for (const auto& [e, label] : labels_)
    if (label == t) out.push_back(e);
  return out;
}

void Graph::make_typed() {
  if (typed_) return;
  typed_ = true;
  for (const auto& e : edges()) labels_.emplace(e, EdgeType::plain);
}

void Graph::drop_edge_types() {
  typed_ = false;
  labels_.clear();
}

Matrix Graph::adjacency_matrix() const {
  Matrix a(n_, n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u)) a(u, v) = 1.0;
  return a;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && bits_ == other.bits_ && typed_ == other.typed_ &&
         labels_ == other.labels_;
}

NamedGraph parse_named_graph(std::string_view s) {
  if (s == "complete" || s == "complete_k") return NamedGraph::complete;
  if (s == "path" || s == "path_k") return NamedGraph::path;
  if (s == "cycle" || s == "cycle_k") return NamedGraph::cycle;
  if (s == "empty" || s == "empty_k") return NamedGraph::empty;
  if (s == "star" || s == "star_k") return NamedGraph::star;
  throw std::invalid_argument("unknown graph kind: " + std::string(s));
}

Graph build_named(NamedGraph kind, std::size_t k) {
  if (k == 0) throw std::invalid_argument("build_named: k must be at least 1");
  Graph g(k);
  switch (kind) {
    case NamedGraph::complete:
      for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
      break;
    case NamedGraph::path:
      for (Vertex u = 0; u + 1 < k; ++u) g.add_edge(u, u + 1);
      break;
    case NamedGraph::cycle:
      if (k < 3) throw std::invalid_argument("build_named: a cycle needs at least 3 vertices");
      for (Vertex u = 0; u < k; ++u) g.add_edge(u, (u + 1) % k);
      break;
    case NamedGraph::empty:
      break;
    case NamedGraph::star:
      for (Vertex v = 1; v < k; ++v) g.add_edge(0, v);
      break;
  }
  return g;
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  bool typed = false;
  for (const auto& p : parts) {
    n += p.order();
    typed = typed || p.typed();
  }
  Graph g(n);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& [u, v] : p.edges()) {
      if (typed)
        g.add_edge(u + offset, v + offset, p.edge_type(u, v));
      else
        g.add_edge(u + offset, v + offset);
    }
    offset += p.order();
  }
  return g;
}

Graph subdivide_edges(const Graph& g, EdgeType selector, std::size_t length) {
  if (length == 0) throw std::invalid_argument("subdivide_edges: length must be at least 1");
  const auto selected = g.edges_of_type(selector);
  if (length == 1) return g;
  const std::size_t fresh = (length - 1) * selected.size();
  Graph out(g.order() + fresh);
  for (const auto& [u, v] : g.edges()) {
    const EdgeType t = g.edge_type(u, v);
    if (t == selector) continue;
    if (g.typed())
      out.add_edge(u, v, t);
    else
      out.add_edge(u, v);
  }
  Vertex next = g.order();
  auto add = [&](Vertex a, Vertex b) {
    if (g.typed())
      out.add_edge(a, b, selector);
    else
      out.add_edge(a, b);
  };
  for (const auto& [u, v] : selected) {
    Vertex prev = u;
    for (std::size_t i = 0; i + 1 < length; ++i) {
      add(prev, next);
      prev = next++;
    }
    add(prev, v);
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.host.assign(vertices.begin(), vertices.end());
  std::sort(sub.host.begin(), sub.host.end());
  sub.host.erase(std::unique(sub.host.begin(), sub.host.end()), sub.host.end());
  std::vector<std::size_t> local(g.order(), kUnreachable);
  for (std::size_t i = 0; i < sub.host.size(); ++i) {
    if (sub.host[i] >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
    local[sub.host[i]] = i;
  }
  sub.graph = Graph(sub.host.size());
  for (std::size_t i = 0; i < sub.host.size(); ++i) {
    for (Vertex w : g.neighbors(sub.host[i])) {
      const std::size_t j = local[w];
      if (j != kUnreachable && i < j) {
        if (g.typed())
          sub.graph.add_edge(i, j, g.edge_type(sub.host[i], w));
        else
          sub.graph.add_edge(i, j);
      }
    }
  }
  return sub;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    if (v >= g.order()) throw std::out_of_range("remove_vertices: vertex out of range");
    gone[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<std::size_t> distances(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("distances: vertex out of range");
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Subgraph ball(const Graph& g, Vertex v, std::size_t r) {
  if (v >= g.order()) throw std::out_of_range("ball: vertex out of range");
  // Truncated BFS so large graphs with small radii stay cheap.
  std::vector<Vertex> inside{v};
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  dist[v] = 0;
  for (std::size_t head = 0; head < inside.size(); ++head) {
    const Vertex x = inside[head];
    if (dist[x] == r) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        inside.push_back(y);
      }
    }
  }
  return induced_subgraph(g, inside);
}

SpanningTree spanning_tree(const Graph& g, Vertex root) {
  if (root >= g.order()) throw std::out_of_range("spanning_tree: root out of range");
  SpanningTree t;
  t.root = root;
  t.parent.assign(g.order(), kUnreachable);
  t.depth.assign(g.order(), kUnreachable);
  t.parent[root] = root;
  t.depth[root] = 0;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Vertex x = t.order[head];
    for (Vertex y : g.neighbors(x)) {
      if (t.depth[y] == kUnreachable) {
        t.parent[y] = x;
        t.depth[y] = t.depth[x] + 1;
        t.order.push_back(y);
      }
    }
  }
  return t;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return spanning_tree(g, 0).order.size() == g.order();
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    auto t = spanning_tree(g, v);
    for (Vertex w : t.order) seen[w] = true;
    std::sort(t.order.begin(), t.order.end());
    out.push_back(std::move(t.order));
  }
  return out;
}

NetCertificate r_net(const Graph& g, std::size_t r, Vertex root) {
  if (r == 0) throw std::invalid_argument("r_net: radius must be positive");
  if (g.order() == 0) throw std::invalid_argument("r_net: empty graph");
  const SpanningTree tree = spanning_tree(g, root);
  if (tree.order.size() != g.order()) throw std::invalid_argument("r_net: graph is disconnected");

  std::vector<std::vector<Vertex>> children(g.order());
  for (Vertex v : tree.order)
    if (v != root) children[tree.parent[v]].push_back(v);

  std::vector<bool> alive(g.order(), true);
  NetCertificate net{r, {}};
  while (true) {
    // Deepest surviving vertex, smallest index among ties.
    Vertex deepest = root;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (alive[v] && tree.depth[v] > tree.depth[deepest]) deepest = v;
    }
    if (tree.depth[deepest] <= r) {
      net.members.push_back(root);
      break;
    }
    Vertex u = deepest;
    for (std::size_t step = 0; step < r; ++step) u = tree.parent[u];
    net.members.push_back(u);
    std::vector<Vertex> stack{u};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      if (!alive[x]) continue;
      alive[x] = false;
      for (Vertex c : children[x]) stack.push_back(c);
    }
  }
  return net;
}

bool covers(const Graph& g, const NetCertificate& net) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex m : net.members) {
    if (m >= g.order()) return false;
    if (dist[m] != 0) {
      dist[m] = 0;
      queue.push_back(m);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return std::all_of(dist.begin(), dist.end(), [&](std::size_t d) { return d <= net.radius; });
}

Graph switch_set(const Graph& g, const std::vector<bool>& in_set) {
  if (in_set.size() != g.order()) throw std::invalid_argument("switch_set: membership size mismatch");
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool edge = g.adjacent(u, v);
      const bool crossing = in_set[u] != in_set[v];
      if (edge != crossing) out.add_edge(u, v);
    }
  }
  return out;
}

Graph switch_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> in_set(g.order(), false);
  for (Vertex v : s) {
    if (v >= g.order()) throw std::out_of_range("switch_set: vertex out of range");
    in_set[v] = true;
  }
  return switch_set(g, in_set);
}

Graph random_connected_graph(std::size_t n, std::size_t max_degree_cap, double density,
                             std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("random_connected_graph: n must be positive");
  if ((n > 2 && max_degree_cap < 2) || (n == 2 && max_degree_cap < 1)) {
    throw std::invalid_argument("random_connected_graph: degree cap too small to connect the graph");
  }
  Graph g(n);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  // Attach each new vertex to a random earlier vertex that still has room.
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Vertex> open;
    for (std::size_t j = 0; j < i; ++j)
      if (g.degree(perm[j]) < max_degree_cap) open.push_back(perm[j]);
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    g.add_edge(perm[i], open[pick(rng)]);
  }
  std::bernoulli_distribution coin(density);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && g.degree(u) < max_degree_cap && g.degree(v) < max_degree_cap &&
          coin(rng)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace eqlines
