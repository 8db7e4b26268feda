#pragma once

// Sign choices for line families: detectors for the two forbidden
// configurations and a greedy switch toward bounded degree.

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "eqlines/graph.hpp"
#include "eqlines/lines.hpp"
#include "eqlines/matrix.hpp"

namespace eqlines {

/// One sign per vertex / line.
struct SignAssignment {
  std::vector<int> signs;

  static SignAssignment identity(std::size_t n) { return {std::vector<int>(n, 1)}; }
  std::size_t size() const { return signs.size(); }
  std::vector<bool> negated() const;  // signs[v] == -1
};

struct CliqueCheck {
  bool ok = true;
  std::size_t limit = 0;  // floor(1 + 1/alpha)
  std::optional<std::vector<Vertex>> witness;  // a clique with limit + 1 vertices
};

// Looks for a clique larger than 1 + 1/alpha, one closed neighbourhood at a time.
CliqueCheck clique_bound_check(const Graph& g, double alpha);

struct Type2Witness {
  Vertex u = 0;
  std::vector<Vertex> a;  // neighbours of u
  std::vector<Vertex> b;  // non-neighbours of u, no edges to a
};

struct Type2Result {
  std::optional<Type2Witness> witness;
  bool exhaustive = true;  // false when the node budget ran out first
};

// u complete to A, empty to B, no A-B edges, |A| = |B| = t, A and B both
// independent. Backtracking; exhaustive for t <= 3, otherwise until the
// node budget is spent.
Type2Result type2_search(const Graph& g, std::size_t t, std::size_t node_budget = 2'000'000);

struct SwitchOptions {
  bool multi_start = true;  // one pass per start vertex of the independent set
  bool sweep = true;        // then flip any vertex adjacent to more than half the rest
};

struct SwitchResult {
  SignAssignment signs;  // normalized so signs[0] = +1
  Graph switched;        // switch_set(g, {v : signs[v] = -1})
  std::size_t max_degree_before = 0;
  std::size_t max_degree_after = 0;
  Vertex start = 0;
};

// Greedy maximal independent set S, flip each u outside S whose neighbours in
// S outnumber its non-neighbours there, optionally sweep; keep the pass with
// the smallest (max degree, edge count, start).
SwitchResult greedy_switch_bounded(const Graph& g, const SwitchOptions& options = {});

// v_i -> signs[i] v_i.
LineFamily flip_signs(const LineFamily& f, const SignAssignment& s);
// D M D with D = diag(signs).
Matrix signed_gram(const Matrix& m, const SignAssignment& s);

nlohmann::json switch_to_json(const SwitchResult& r);

}  // namespace eqlines
