#pragma once

// Equiangular line families and their Gram matrices: build the Gram matrix of
// a negative graph, factor it into unit vectors, verify arbitrary families,
// and the closed-form counts (N_alpha(d), Gerzon).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqlines/exact.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/k_order.hpp"
#include "eqlines/matrix.hpp"

namespace eqlines {

/// n unit vectors in R^d (one per row) with common |inner product| alpha.
struct LineFamily {
  std::size_t d = 0;
  double alpha = 0.0;
  std::optional<AlgebraicReal> alpha_exact;
  Matrix vectors;

  std::size_t size() const { return vectors.rows(); }
};

// Nearest double to alpha (rational alphas are converted once, exactly rounded).
double alpha_value(const AlgebraicReal& alpha);

// 1 on the diagonal, -alpha on edges, +alpha on non-edges.
// Throws std::invalid_argument unless 0 < alpha < 1.
Matrix gram_from_graph(const Graph& g, double alpha);
Matrix gram_from_graph(const Graph& g, const AlgebraicReal& alpha);

struct PsdReport {
  bool is_psd = false;
  std::size_t rank = 0;     // eigenvalues above tol * max(1, lambda_1)
  std::size_t nullity = 0;  // eigenvalues within tol * max(1, lambda_1) of zero
  double min_eigenvalue = 0.0;
};

PsdReport psd_rank(const Matrix& m, double tol = 1e-9);

// V with V V^T = m, from the eigendecomposition; eigenvalues in [-tol, tol]
// are clipped to zero and the columns past the rank are zero. Throws
// std::invalid_argument when m is not PSD or its rank exceeds d.
LineFamily realize(const Matrix& gram, std::size_t d, double alpha, double tol = 1e-9);

struct Construction {
  LineFamily family;
  Graph graph;  // negative graph: ell copies of the witness plus h isolated vertices
  Graph witness;
  std::size_t k = 0;
  std::size_t ell = 0;
  std::size_t h = 0;
  std::string optimality;  // when the count is known to be the maximum
};

// ell = floor((d-1)/(k-1)) copies of the k(lambda) witness plus h = (d-1) - (k-1) ell
// isolated vertices, realized in R^d. Throws BudgetExceeded when k(lambda) is
// not found within the budget and std::invalid_argument when d < k.
Construction construct_optimal(const AlgebraicReal& alpha, std::size_t d, const EnumerationBudget& budget = {});

struct FamilyReport {
  bool valid = false;
  double max_norm_deviation = 0.0;
  double max_inner_product_deviation = 0.0;
  double alpha_recovered = 0.0;  // mean |<v_i, v_j>| over pairs
  std::size_t ambiguous_pairs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ambiguous_examples;  // first few
};

FamilyReport verify_family(const LineFamily& f, double tol = 1e-9);

// i ~ j when <v_i, v_j> < 0.
Graph negative_graph(const LineFamily& f);

std::uint64_t gerzon_bound(std::uint64_t d);

// Rank of the n x d^2 matrix with rows v_i (x) v_i equals n.
bool tensor_independence(const LineFamily& f, double tol = 1e-9);

/// Closed form for N_alpha(d): a number when k(lambda) is finite, otherwise
/// the marker for the d + o(d) regime.
struct NAlpha {
  std::optional<std::uint64_t> value;
  bool linear() const { return !value.has_value(); }
};

// floor(k (d - 1) / (k - 1)); k empty means k = infinity. Requires d >= 1, k >= 2.
NAlpha n_alpha_formula(std::optional<std::size_t> k, std::uint64_t d);
NAlpha n_alpha(const AlgebraicReal& alpha, std::uint64_t d, const EnumerationBudget& budget = {});

// The six diagonals of the regular icosahedron; alpha = 1/sqrt(5).
LineFamily icosahedron_family();

/// Rank-nullity and nullity-versus-multiplicity checks on a Gram matrix.
struct GramAudit {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::size_t multiplicity = 0;  // of lambda in the negative graph
  bool rank_nullity_ok = false;  // rank + nullity == n
  bool nullity_bound_ok = false;  // nullity <= multiplicity + 1
};

GramAudit audit_gram(const Matrix& gram, const Graph& negative, double lambda, double tol = 1e-9);

// CSV: "d,alpha_float,n", the values, then one row of d coordinates per line.
std::string family_to_csv(const LineFamily& f);
LineFamily family_from_csv(const std::string& text);  // throws std::invalid_argument
nlohmann::json family_to_json(const LineFamily& f);
LineFamily family_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const FamilyReport& r);

}  // namespace eqlines
