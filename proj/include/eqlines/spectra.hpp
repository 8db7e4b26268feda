#pragma once

// Dense symmetric eigenvalues, multiplicity clustering, local spectral radii,
// exact closed-walk counts and the Cauchy interlacing verifier.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqlines/exact.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/matrix.hpp"

namespace eqlines {

struct EigenOptions {
  // Cyclic Jacobi up to this order, Householder tridiagonalization + implicit QL above.
  std::size_t jacobi_max_order = 512;
  bool vectors = false;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // row i is a unit eigenvector for values[i] (when requested)
};

// Throws std::invalid_argument on non-square, non-finite or non-symmetric input
// (asymmetry above 1e-12 * max(1, max|m_ij|)).
EigenDecomposition eigen_decompose(const Matrix& m, const EigenOptions& options = {});

namespace detail {
EigenDecomposition jacobi_eigen(Matrix a, bool vectors);
EigenDecomposition tridiagonal_ql_eigen(const Matrix& a, bool vectors);
}  // namespace detail

/// Eigenvalues sorted descending, with the tolerance used to group them.
struct Spectrum {
  std::vector<double> values;
  double cluster_tol = 1e-8;

  std::size_t size() const { return values.size(); }
};

// cluster_tol defaults to 1e-8 * max(1, lambda_1).
Spectrum eigen_sym(const Matrix& m, std::optional<double> cluster_tol = std::nullopt,
                   const EigenOptions& options = {});
Spectrum graph_spectrum(const Graph& g, std::optional<double> cluster_tol = std::nullopt);

struct MultiplicityReport {
  std::size_t count = 0;
  // Distance from lam to the nearest eigenvalue not counted (infinity if none).
  double gap = 0.0;
  // gap < 10 * tol: the cluster is not cleanly separated.
  bool ill_separated = false;
};

MultiplicityReport multiplicity_report(const Spectrum& s, double lam, double tol);
std::size_t multiplicity(const Spectrum& s, double lam, double tol);

struct Cluster {
  double center = 0.0;
  std::size_t multiplicity = 0;
  double low = 0.0;
  double high = 0.0;
};

// Chains values whose consecutive differences are within cluster_tol.
std::vector<Cluster> clusters(const Spectrum& s);

double lambda1(const Graph& g);
double lambda2(const Graph& g);  // needs at least two vertices

// lambda_1 of the radius-s ball around v.
double local_radius(const Graph& g, Vertex v, std::size_t s);

struct RadiusBounds {
  double lower = 0.0;  // Rayleigh quotient
  double upper = 0.0;  // Collatz-Wielandt bound max_i (Ax)_i / x_i
};

// Two-sided bounds on lambda_1 by power iteration on A + I from the all-ones
// vector. The upper bound holds for any positive iterate, converged or not.
RadiusBounds spectral_radius_bounds(const Graph& g, double rel_tol = 1e-12,
                                    std::size_t max_iterations = 20000);

// (A^len)_{vv}; len must be even.
BigInt closed_walks(const Graph& g, Vertex v, std::size_t len);
// trace(A^len) = sum over v of closed_walks(g, v, len).
BigInt total_closed_walks(const Graph& g, std::size_t len);

// big_1 >= small_1 >= big_2 >= small_2 >= ... within slack.
bool interlaces(const Spectrum& big, const Spectrum& small, double slack = 1e-7);

// Spectrum of g minus v interlaces the spectrum of g.
bool interlacing_check(const Graph& g, Vertex v, double slack = 1e-7);

// One eigenvalue per line, 17 significant digits.
std::string spectrum_to_csv(const Spectrum& s);
nlohmann::json spectrum_to_json(const Spectrum& s);

}  // namespace eqlines
