#include "eqlines/switching.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace eqlines {

std::vector<bool> SignAssignment::negated() const {
  std::vector<bool> out(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) out[i] = signs[i] < 0;
  return out;
}

namespace {

bool grow_clique(const Graph& g, std::vector<Vertex>& clique, const std::vector<Vertex>& cand, std::size_t target) {
  if (clique.size() == target) return true;
  if (clique.size() + cand.size() < target) return false;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
    clique.push_back(cand[i]);
    if (grow_clique(g, clique, next, target)) return true;
    clique.pop_back();
  }
  return false;
}

struct Budget {
  std::size_t left;
  bool unlimited;
  bool spent = false;

  bool step() {
    if (unlimited) return true;
    if (left == 0) {
      spent = true;
      return false;
    }
    --left;
    return true;
  }
};

// Independent set of size t inside cand (ascending), appended to `chosen`.
bool find_independent(const Graph& g, const std::vector<Vertex>& cand, std::size_t from, std::size_t t,
                      std::vector<Vertex>& chosen, Budget& budget) {
  if (chosen.size() == t) return true;
  for (std::size_t i = from; i < cand.size(); ++i) {
    if (chosen.size() + (cand.size() - i) < t) return false;
    if (!budget.step()) return false;
    const Vertex v = cand[i];
    bool free = true;
    for (Vertex c : chosen) free = free && !g.adjacent(c, v);
    if (!free) continue;
    chosen.push_back(v);
    if (find_independent(g, cand, i + 1, t, chosen, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

// Independent A inside N(u), then an independent B among the non-neighbours of u and A.
bool search_a(const Graph& g, Vertex u, const std::vector<Vertex>& nbrs, std::size_t from, std::size_t t,
              std::vector<Vertex>& a, std::vector<Vertex>& b, Budget& budget) {
  if (a.size() == t) {
    std::vector<Vertex> c;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (x == u || g.adjacent(u, x)) continue;
      bool clear = true;
      for (Vertex y : a) clear = clear && !g.adjacent(x, y);
      if (clear) c.push_back(x);
    }
    b.clear();
    return find_independent(g, c, 0, t, b, budget);
  }
  for (std::size_t i = from; i < nbrs.size(); ++i) {
    if (a.size() + (nbrs.size() - i) < t) return false;
    if (!budget.step()) return false;
    const Vertex v = nbrs[i];
    bool free = true;
    for (Vertex x : a) free = free && !g.adjacent(x, v);
    if (!free) continue;
    a.push_back(v);
    if (search_a(g, u, nbrs, i + 1, t, a, b, budget)) return true;
    a.pop_back();
  }
  return false;
}

// Maximal independent set: `start` first, then ascending index.
std::vector<bool> greedy_independent(const Graph& g, Vertex start) {
  const std::size_t n = g.order();
  std::vector<bool> in(n, false), blocked(n, false);
  auto take = [&](Vertex v) {
    in[v] = true;
    blocked[v] = true;
    for (Vertex u : g.neighbors(v)) blocked[u] = true;
  };
  take(start);
  for (Vertex v = 0; v < n; ++v)
    if (!blocked[v]) take(v);
  return in;
}

struct Pass {
  std::vector<bool> flipped;
  Graph h;
  Vertex start;
};

Pass run_pass(const Graph& g, Vertex start, bool sweep) {
  const std::size_t n = g.order();
  const std::vector<bool> in_s = greedy_independent(g, start);
  std::size_t s_size = 0;
  for (bool b : in_s) s_size += b;
  Pass p{std::vector<bool>(n, false), Graph(), start};
  for (Vertex u = 0; u < n; ++u) {
    if (in_s[u]) continue;
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(u)) inside += in_s[w];
    if (inside > s_size - inside) p.flipped[u] = true;
  }
  p.h = switch_set(g, p.flipped);
  // each flip here strictly lowers the edge count, so this stops
  for (bool changed = sweep; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (2 * p.h.degree(v) > n - 1) {
        const Vertex one[] = {v};
        p.h = switch_set(p.h, one);
        p.flipped[v] = !p.flipped[v];
        changed = true;
      }
    }
  }
  return p;
}

}  // namespace

CliqueCheck clique_bound_check(const Graph& g, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("clique_bound_check: alpha must lie in (0, 1)");
  CliqueCheck out;
  out.limit = static_cast<std::size_t>(std::floor(1.0 + 1.0 / alpha + 1e-9));
  const std::size_t target = out.limit + 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> cand;
    for (Vertex u : g.neighbors(v))
      if (u > v) cand.push_back(u);
    std::vector<Vertex> clique{v};
    if (grow_clique(g, clique, cand, target)) {
      out.ok = false;
      out.witness = std::move(clique);
      return out;
    }
  }
  return out;
}

Type2Result type2_search(const Graph& g, std::size_t t, std::size_t node_budget) {
  if (t == 0) throw std::invalid_argument("type2_search: t must be positive");
  Budget budget{node_budget, t <= 3};
  Type2Result out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::vector<Vertex> nbrs = g.neighbors(u);
    std::vector<Vertex> a, b;
    if (search_a(g, u, nbrs, 0, t, a, b, budget)) {
      out.witness = Type2Witness{u, std::move(a), std::move(b)};
      return out;
    }
    if (budget.spent) {
      out.exhaustive = false;
      return out;
    }
  }
  return out;
}

SwitchResult greedy_switch_bounded(const Graph& g, const SwitchOptions& options) {
  const std::size_t n = g.order();
  SwitchResult out;
  out.max_degree_before = max_degree(g);
  if (n == 0) return out;

  std::optional<Pass> best;
  auto score = [](const Pass& p) { return std::make_tuple(max_degree(p.h), p.h.edge_count(), p.start); };
  const std::size_t starts = options.multi_start ? n : 1;
  for (Vertex s = 0; s < starts; ++s) {
    Pass p = run_pass(g, s, options.sweep);
    if (!best || score(p) < score(*best)) best = std::move(p);
  }
  // S and its complement switch to the same graph
  if (best->flipped[0])
    for (std::size_t v = 0; v < n; ++v) best->flipped[v] = !best->flipped[v];

  out.signs.signs.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.signs.signs[v] = best->flipped[v] ? -1 : 1;
  out.switched = switch_set(g, best->flipped);
  out.max_degree_after = max_degree(out.switched);
  out.start = best->start;
  return out;
}

LineFamily flip_signs(const LineFamily& f, const SignAssignment& s) {
  if (s.size() != f.size()) throw std::invalid_argument("flip_signs: one sign per line required");
  LineFamily out = f;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (s.signs[i] < 0)
      for (double& x : out.vectors.row(i)) x = -x;
  return out;
}

Matrix signed_gram(const Matrix& m, const SignAssignment& s) {
  if (s.size() != m.rows() || !m.square()) throw std::invalid_argument("signed_gram: size mismatch");
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * s.signs[i] * s.signs[j];
  return out;
}

nlohmann::json switch_to_json(const SwitchResult& r) {
  return {{"signs", r.signs.signs},
          {"max_degree_before", r.max_degree_before},
          {"max_degree_after", r.max_degree_after},
          {"start", r.start}};
}

}  // namespace eqlines
