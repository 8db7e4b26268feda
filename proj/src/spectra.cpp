#include "eqlines/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace eqlines {

Spectrum eigen_sym(const Matrix& m, std::optional<double> cluster_tol, const EigenOptions& options) {
  EigenOptions values_only = options;
  values_only.vectors = false;
  Spectrum s;
  s.values = eigen_decompose(m, values_only).values;
  const double top = s.values.empty() ? 0.0 : std::fabs(s.values.front());
  s.cluster_tol = cluster_tol.value_or(1e-8 * std::max(1.0, top));
  if (!(s.cluster_tol > 0.0)) throw std::invalid_argument("cluster_tol must be positive");
  return s;
}

Spectrum graph_spectrum(const Graph& g, std::optional<double> cluster_tol) {
  return eigen_sym(g.adjacency_matrix(), cluster_tol);
}

MultiplicityReport multiplicity_report(const Spectrum& s, double lam, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("multiplicity: tol must be positive");
  MultiplicityReport r;
  r.gap = std::numeric_limits<double>::infinity();
  for (double x : s.values) {
    const double dist = std::fabs(x - lam);
    if (dist <= tol)
      ++r.count;
    else
      r.gap = std::min(r.gap, dist);
  }
  r.ill_separated = r.gap < 10.0 * tol;
  return r;
}

std::size_t multiplicity(const Spectrum& s, double lam, double tol) {
  return multiplicity_report(s, lam, tol).count;
}

std::vector<Cluster> clusters(const Spectrum& s) {
  std::vector<Cluster> out;
  for (double x : s.values) {
    if (!out.empty() && out.back().low - x <= s.cluster_tol) {
      Cluster& c = out.back();
      c.center = (c.center * static_cast<double>(c.multiplicity) + x) / static_cast<double>(c.multiplicity + 1);
      ++c.multiplicity;
      c.low = x;
    } else {
      out.push_back({x, 1, x, x});
    }
  }
  return out;
}

double lambda1(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("lambda1: graph has no vertices");
  if (g.order() == 1) return 0.0;
  return graph_spectrum(g).values.front();
}

double lambda2(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("lambda2: graph needs at least two vertices");
  return graph_spectrum(g).values[1];
}

double local_radius(const Graph& g, Vertex v, std::size_t s) { return lambda1(ball(g, v, s).graph); }

RadiusBounds spectral_radius_bounds(const Graph& g, double rel_tol, std::size_t max_iterations) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("spectral_radius_bounds: graph has no vertices");
  if (g.edge_count() == 0) return {0.0, 0.0};
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);

  std::vector<double> x(n, 1.0), ax(n);
  RadiusBounds best{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t it = 0; it < max_iterations; ++it) {
    double xx = 0.0;
    double xax = 0.0;
    double cw = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      double sum = 0.0;
      for (Vertex w : nbrs[v]) sum += x[w];
      ax[v] = sum;
      xx += x[v] * x[v];
      xax += x[v] * sum;
      cw = std::max(cw, sum / x[v]);
    }
    best.lower = std::max(best.lower, xax / xx);
    best.upper = std::min(best.upper, cw);
    if (best.upper - best.lower <= rel_tol * best.upper) break;
    // Shifted iteration keeps bipartite graphs from oscillating.
    double norm = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      x[v] = x[v] + ax[v];
      norm = std::max(norm, x[v]);
    }
    for (double& xv : x) xv /= norm;
    // Underflow would break positivity; the bounds so far remain valid.
    if (*std::min_element(x.begin(), x.end()) < 1e-280) break;
  }
  return best;
}

BigInt closed_walks(const Graph& g, Vertex v, std::size_t len) {
  if (len % 2 != 0) throw std::invalid_argument("closed_walks: length must be even");
  if (v >= g.order()) throw std::out_of_range("closed_walks: vertex out of range");
  // (A^{2h})_{vv} = |A^h e_v|^2, restricted to the radius-h ball.
  const std::size_t half = len / 2;
  const Subgraph b = ball(g, v, half);
  const std::size_t m = b.graph.order();
  const std::size_t center = static_cast<std::size_t>(
      std::lower_bound(b.host.begin(), b.host.end(), v) - b.host.begin());
  std::vector<std::vector<Vertex>> nbrs(m);
  for (Vertex u = 0; u < m; ++u) nbrs[u] = b.graph.neighbors(u);
  std::vector<BigInt> walk(m, 0), next(m);
  walk[center] = 1;
  for (std::size_t step = 0; step < half; ++step) {
    for (Vertex u = 0; u < m; ++u) {
      BigInt sum = 0;
      for (Vertex w : nbrs[u]) sum += walk[w];
      next[u] = std::move(sum);
    }
    std::swap(walk, next);
  }
  BigInt total = 0;
  for (const auto& c : walk) total += c * c;
  return total;
}

BigInt total_closed_walks(const Graph& g, std::size_t len) {
  BigInt total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += closed_walks(g, v, len);
  return total;
}

bool interlaces(const Spectrum& big, const Spectrum& small, double slack) {
  if (small.size() + 1 != big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small.values[i] > big.values[i] + slack) return false;
    if (small.values[i] < big.values[i + 1] - slack) return false;
  }
  return true;
}

bool interlacing_check(const Graph& g, Vertex v, double slack) {
  if (g.order() < 2) throw std::invalid_argument("interlacing_check: graph needs at least two vertices");
  const Vertex removed[] = {v};
  const Graph h = remove_vertices(g, removed).graph;
  return interlaces(graph_spectrum(g), graph_spectrum(h), slack);
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::string out;
  char buf[64];
  for (double x : s.values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    out += buf;
  }
  return out;
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
  nlohmann::json j;
  j["values"] = s.values;
  j["cluster_tol"] = s.cluster_tol;
  nlohmann::json report = nlohmann::json::array();
  const auto cs = clusters(s);
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    report.push_back({{"value", cs[i].center}, {"multiplicity", cs[i].multiplicity}});
    if (i + 1 < cs.size()) min_gap = std::min(min_gap, cs[i].low - cs[i + 1].high);
  }
  j["clusters"] = std::move(report);
  j["min_cluster_gap"] = std::isfinite(min_gap) ? nlohmann::json(min_gap) : nlohmann::json(nullptr);
  return j;
}

}  // namespace eqlines
