#pragma once

// Small connected graphs up to isomorphism, and the spectral radius order
// k(lambda): the fewest vertices of a graph whose top eigenvalue is lambda.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqlines/exact.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

inline constexpr std::size_t kMaxEnumerationOrder = 9;
inline constexpr std::size_t kMaxCanonicalOrder = 11;

struct EnumerationBudget {
  std::size_t n_max = 8;
  bool dedup = true;
  std::size_t threads = 1;  // mask scans only (dedup = false)
};

/// Canonical labeling: the relabeling minimizing the upper-triangle adjacency
/// bit string (read column by column, first bit most significant).
struct CanonicalForm {
  std::uint64_t key = 0;
  std::vector<Vertex> order;  // order[i] = original vertex placed at position i
  Graph graph;                // g relabeled by `order`
};

// Requires n <= kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Graph on n vertices from the upper-triangle mask, bit index of pair (i, j),
// i < j, is j(j-1)/2 + i.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// Visits connected graphs on n vertices: every labeled one once (dedup = false,
// ascending mask) or one canonical representative per class (dedup = true,
// ascending key). The visitor returns false to stop early.
void for_each_connected(std::size_t n, bool dedup, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_connected(std::size_t n, bool dedup);

struct KOrderCertificates {
  bool divisibility = false;  // minpoly(lambda) divides char_poly(witness)
  bool numeric_top = false;   // |lambda_1(witness) - lambda| <= 1e-8
  bool exact_top = false;     // no root of char_poly(witness) exceeds lambda
};

struct KOrderResult {
  std::optional<std::size_t> k;  // empty: exceeded the budget
  std::size_t n_max = 0;
  std::optional<Graph> witness;
  KOrderCertificates certificates;
  std::string note;  // why the search stopped without a witness, if known

  bool exceeded() const { return !k.has_value(); }
};

// Raised by callers that need a finite k(lambda) and did not get one.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument when lambda <= 0 or the budget is out of range.
KOrderResult spectral_radius_order(const AlgebraicReal& lambda, const EnumerationBudget& budget = {});

nlohmann::json korder_to_json(const AlgebraicReal& lambda, const KOrderResult& r);

}  // namespace eqlines
