#include "eqlines/k_order.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "eqlines/graph_io.hpp"
#include "eqlines/parallel.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

namespace {

using Coloring = std::vector<std::uint64_t>;

constexpr double kTopTol = 1e-8;

// Colour refinement to the coarsest equitable partition finer than `color`.
// New colours are ranks of (old colour, sorted neighbour colours), so cell
// order is preserved and the result does not depend on vertex labels.
std::size_t refine(const Graph& g, Coloring& color) {
  const std::size_t n = g.order();
  auto distinct = [&] {
    Coloring c = color;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  };
  {
    Coloring ranks = color;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (auto& c : color) c = static_cast<std::uint64_t>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
  }
  std::size_t classes = distinct();
  std::vector<std::vector<std::uint64_t>> sig(n);
  while (classes < n) {
    for (Vertex v = 0; v < n; ++v) {
      sig[v].assign(1, color[v]);
      for (Vertex u : g.neighbors(v)) sig[v].push_back(color[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<std::uint64_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<std::uint64_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return classes;
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == u || x == v) continue;
    if (g.adjacent(u, x) != g.adjacent(v, x)) return false;
  }
  return true;
}

std::uint64_t key_of(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t key = 0;
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  return key;
}

struct Best {
  bool found = false;
  std::uint64_t key = 0;
  std::vector<Vertex> order;
};

void search(const Graph& g, Coloring color, Best& best) {
  const std::size_t n = g.order();
  if (refine(g, color) == n) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[color[v]] = v;
    const std::uint64_t key = key_of(g, order);
    if (!best.found || key < best.key) best = {true, key, std::move(order)};
    return;
  }
  // first cell with two or more vertices
  std::map<std::uint64_t, std::size_t> sizes;
  for (auto c : color) ++sizes[c];
  std::uint64_t target = 0;
  for (auto [c, size] : sizes) {
    if (size > 1) {
      target = c;
      break;
    }
  }
  std::vector<Vertex> tried;
  for (Vertex v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    // swapping twins is an automorphism fixing everything individualized so far
    if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g, t, v); })) continue;
    tried.push_back(v);
    Coloring next(n);
    for (Vertex x = 0; x < n; ++x) next[x] = 2 * color[x] + (x == v ? 0 : 1);
    search(g, std::move(next), best);
  }
}

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
  return out;
}

void check_order(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumeration needs at least one vertex");
  if (n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
}

// Adjacency rows as small bitmasks, straight from the triangle mask.
struct MaskRows {
  std::uint16_t row[kMaxEnumerationOrder] = {};
};

MaskRows rows_from_mask(std::size_t n, std::uint64_t mask) {
  MaskRows r;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1u) {
        r.row[i] |= std::uint16_t(1u << j);
        r.row[j] |= std::uint16_t(1u << i);
      }
    }
  }
  return r;
}

bool mask_connected(std::size_t n, const MaskRows& r) {
  const std::uint32_t all = (1u << n) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= r.row[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Canonical classes on n vertices from those on n - 1: every connected graph
// has a vertex whose removal keeps it connected. `keep` filters the classes.
std::vector<Graph> extend_level(const std::vector<Graph>& prev, std::size_t n, std::size_t threads,
                                const std::function<bool(const Graph&)>& keep) {
  if (n == 1) {
    Graph single(1);
    return keep(single) ? std::vector<Graph>{single} : std::vector<Graph>{};
  }
  const std::size_t subsets = (std::size_t{1} << (n - 1)) - 1;
  std::vector<std::vector<std::pair<std::uint64_t, Graph>>> found(prev.size());
  parallel_for(prev.size(), threads, [&](std::size_t idx) {
    const Graph& base = prev[idx];
    std::map<std::uint64_t, Graph> local;
    for (std::size_t s = 1; s <= subsets; ++s) {
      Graph h(n);
      for (auto [u, v] : base.edges()) h.add_edge(u, v);
      for (Vertex u = 0; u + 1 < n; ++u)
        if ((s >> u) & 1u) h.add_edge(u, n - 1);
      CanonicalForm c = canonical_form(h);
      if (local.count(c.key)) continue;
      if (!keep(c.graph)) continue;
      local.emplace(c.key, std::move(c.graph));
    }
    found[idx].assign(std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  });
  std::map<std::uint64_t, Graph> merged;
  for (auto& part : found)
    for (auto& [key, g] : part) merged.emplace(key, std::move(g));
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (auto& [key, g] : merged) out.push_back(std::move(g));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_form: at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  CanonicalForm out;
  if (g.order() == 0) return out;
  Best best;
  search(g, Coloring(g.order(), 0), best);
  out.key = best.key;
  out.order = std::move(best.order);
  out.graph = relabel(g, out.order);
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).key == canonical_form(b).key;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(i, j);
  return g;
}

void for_each_connected(std::size_t n, bool dedup, const std::function<bool(const Graph&)>& visit) {
  check_order(n);
  if (dedup) {
    std::vector<Graph> level;
    for (std::size_t m = 1; m <= n; ++m) level = extend_level(level, m, 1, [](const Graph&) { return true; });
    for (const auto& g : level)
      if (!visit(g)) return;
    return;
  }
  const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (!mask_connected(n, rows_from_mask(n, mask))) continue;
    if (!visit(graph_from_mask(n, mask))) return;
  }
}

std::vector<Graph> enumerate_connected(std::size_t n, bool dedup) {
  std::vector<Graph> out;
  for_each_connected(n, dedup, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

namespace {

struct Target {
  const AlgebraicReal& lambda;
  double value;
};

bool qualifies(const Graph& g, const Target& t) {
  if (std::abs(lambda1(g) - t.value) > kTopTol) return false;
  return poly_divides(t.lambda.minpoly(), char_poly(g));
}

// Smallest canonical key among qualifying masks on n vertices.
std::optional<CanonicalForm> scan_masks(std::size_t n, const Target& t, std::size_t threads) {
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t masks = std::uint64_t{1} << pairs;
  const std::uint64_t chunk = std::uint64_t{1} << std::min<std::size_t>(pairs, 16);
  const std::size_t chunks = static_cast<std::size_t>((masks + chunk - 1) / chunk);
  const double limit = t.value + kTopTol;
  std::vector<std::optional<CanonicalForm>> best(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t end = std::min(masks, (c + 1) * chunk);
    for (std::uint64_t mask = c * chunk; mask < end; ++mask) {
      const auto edges = static_cast<double>(std::popcount(mask));
      if (2.0 * edges / static_cast<double>(n) > limit) continue;  // lambda_1 >= average degree
      const MaskRows rows = rows_from_mask(n, mask);
      int top_degree = 0;
      for (std::size_t v = 0; v < n; ++v) top_degree = std::max(top_degree, std::popcount(rows.row[v]));
      if (std::sqrt(static_cast<double>(top_degree)) > limit) continue;  // lambda_1 >= sqrt(max degree)
      if (!mask_connected(n, rows)) continue;
      const Graph g = graph_from_mask(n, mask);
      if (!qualifies(g, t)) continue;
      CanonicalForm cf = canonical_form(g);
      if (!best[c] || cf.key < best[c]->key) best[c] = std::move(cf);
    }
  });
  std::optional<CanonicalForm> out;
  for (auto& b : best)
    if (b && (!out || b->key < out->key)) out = std::move(b);
  return out;
}

}  // namespace

KOrderResult spectral_radius_order(const AlgebraicReal& lambda, const EnumerationBudget& budget) {
  if (lambda.compare(0) != std::strong_ordering::greater)
    throw std::invalid_argument("spectral_radius_order: lambda must be positive");
  if (budget.n_max < 1 || budget.n_max > kMaxEnumerationOrder)
    throw std::invalid_argument("spectral_radius_order: n_max must lie in 1.." + std::to_string(kMaxEnumerationOrder));

  KOrderResult result;
  result.n_max = budget.n_max;
  // Top eigenvalues of graphs are weak Perron numbers; anything else cannot appear.
  if (!lambda.minpoly().monic()) {
    result.note = "not an algebraic integer";
    return result;
  }
  if (!is_weak_perron(lambda)) {
    result.note = "not a weak Perron number";
    return result;
  }

  const Target target{lambda, lambda.refine(Rational(1, boost::multiprecision::pow(BigInt(10), 16))).to_double()};
  std::optional<Graph> witness;
  std::vector<Graph> level;
  for (std::size_t n = 1; n <= budget.n_max && !witness; ++n) {
    if (budget.dedup) {
      // Induced subgraphs never have a larger top eigenvalue, so heavier classes can go.
      level = extend_level(level, n, budget.threads,
                           [&](const Graph& g) { return lambda1(g) <= target.value + kTopTol; });
      for (const auto& g : level) {  // ascending key: the first hit is the minimum
        if (qualifies(g, target)) {
          witness = g;
          break;
        }
      }
    } else if (n > 1) {
      if (auto cf = scan_masks(n, target, budget.threads)) witness = std::move(cf->graph);
    }
  }
  if (!witness) return result;

  const IntPolynomial p = char_poly(*witness);
  result.k = witness->order();
  result.certificates.divisibility = poly_divides(lambda.minpoly(), p);
  result.certificates.numeric_top = std::abs(lambda1(*witness) - target.value) <= kTopTol;
  result.certificates.exact_top = roots_above(p, lambda) == 0;
  result.witness = std::move(witness);
  return result;
}

nlohmann::json korder_to_json(const AlgebraicReal& lambda, const KOrderResult& r) {
  nlohmann::json lam = algebraic_to_json(lambda);
  lam["float"] = lambda.to_double();
  nlohmann::json out{{"lambda", lam}, {"n_max", r.n_max}};
  if (r.k) {
    out["k"] = *r.k;
    out["witness"] = graph_to_json(*r.witness);
  } else {
    out["k"] = "exceeded";
    out["witness"] = nullptr;
  }
  out["certificates"] = {{"divisibility", r.certificates.divisibility},
                         {"numeric_top", r.certificates.numeric_top},
                         {"exact_top", r.certificates.exact_top}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace eqlines
