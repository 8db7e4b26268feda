#include "eqlines/mult_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eqlines/parallel.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

namespace {

constexpr double kInflate = 1e-9;

std::size_t ceil_at_least_one(double x) {
  // ln ln e^e lands a hair above 1
  const double c = std::ceil(x - 1e-9);
  return c < 1.0 ? 1 : static_cast<std::size_t>(c);
}

// Certified upper bound on lambda_1 of a ball, already inflated.
double radius_upper(const Graph& b) {
  if (b.edge_count() == 0) return kInflate;
  return spectral_radius_bounds(b, 1e-10, 20000).upper + kInflate;
}

bool exceeds(const Graph& b, double lambda) {
  const double cut = lambda + 1e-9;
  if (b.edge_count() == 0) return 0.0 > cut;
  const RadiusBounds rb = spectral_radius_bounds(b, 1e-12, 5000);
  if (rb.lower > cut) return true;
  if (rb.upper <= cut) return false;
  return lambda1(b) > cut;
}

// Neumaier summation in index order.
double stable_sum(const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

void check_args(double lambda, std::size_t r, std::size_t s) {
  if (!(lambda > 0.0)) throw std::invalid_argument("certified_mult_upper: lambda must be positive");
  if (r == 0 || s == 0) throw std::invalid_argument("certified_mult_upper: r and s must be at least 1");
}

void validate(const Graph& g, MultiplicityBound& b) {
  b.measured = multiplicity(graph_spectrum(g), b.lambda, 1e-8);
  b.sound = b.bound >= *b.measured;
}

}  // namespace

MultParams default_params(std::size_t n, std::size_t delta, std::optional<double> c) {
  MultParams p;
  p.c = c ? *c : 1.0 / (4.0 * std::log(static_cast<double>(delta) + 1.0));
  if (!(p.c > 0.0) || !std::isfinite(p.c)) throw std::invalid_argument("default_params: c must be positive");
  const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 3)));
  p.r = ceil_at_least_one(p.c * std::log(ln));
  p.s = std::max(p.r, ceil_at_least_one(p.c * ln));
  return p;
}

std::vector<Vertex> high_radius_vertices(const Graph& g, double lambda, std::size_t s, std::size_t threads) {
  const std::size_t n = g.order();
  std::vector<char> high(n, 0);
  parallel_for(n, threads, [&](std::size_t v) { high[v] = exceeds(ball(g, v, s + 1).graph, lambda); });
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (high[v]) out.push_back(v);
  return out;
}

std::size_t high_radius_spread(const Graph& g, std::size_t s) {
  if (g.order() < 2) return 0;
  const std::vector<Vertex> high = high_radius_vertices(g, lambda2(g), s);
  std::size_t spread = 0;
  for (Vertex u : high) {
    const std::vector<std::size_t> d = distances(g, u);
    for (Vertex v : high) spread = std::max(spread, d[v]);
  }
  return spread;
}

bool cluster_distance_check(const Graph& g, std::size_t s) { return high_radius_spread(g, s) <= 2 * s + 2; }

bool net_removal_radius_check(const Graph& g, std::size_t r) {
  const NetCertificate net = r_net(g, r);
  const Subgraph h = remove_vertices(g, net.members);
  if (h.graph.order() == 0) return true;
  const double e = 2.0 * static_cast<double>(r);
  return std::pow(lambda1(h.graph), e) <= std::pow(lambda1(g), e) - 1.0 + 1e-7;
}

bool local_global_check(const Graph& g, std::size_t s) {
  if (s == 0) throw std::invalid_argument("local_global_check: s must be at least 1");
  const double left = total_closed_walks(g, 2 * s).convert_to<double>();
  std::vector<double> terms(g.order());
  for (Vertex v = 0; v < g.order(); ++v) terms[v] = std::pow(local_radius(g, v, s), 2.0 * static_cast<double>(s));
  const double right = stable_sum(terms);
  return left <= right * (1.0 + 1e-6) + 1e-9;
}

MultiplicityBound certified_mult_upper(const Graph& g, double lambda, std::size_t r, std::size_t s,
                                       const MultBoundOptions& options) {
  check_args(lambda, r, s);
  if (!is_connected(g)) throw std::invalid_argument("certified_mult_upper: graph is disconnected; split it first");

  MultiplicityBound out;
  out.lambda = lambda;
  out.r = r;
  out.s = s;
  out.removed_high = high_radius_vertices(g, lambda, s, options.threads);

  const Subgraph h0 = remove_vertices(g, out.removed_high);
  std::vector<Vertex> net_local;
  for (const std::vector<Vertex>& comp : components(h0.graph)) {
    const Subgraph c = induced_subgraph(h0.graph, comp);
    for (Vertex m : r_net(c.graph, r).members) net_local.push_back(c.host[m]);
  }
  for (Vertex v : net_local) out.removed_net.push_back(h0.host[v]);
  std::sort(out.removed_net.begin(), out.removed_net.end());

  const Subgraph h = remove_vertices(h0.graph, net_local);
  const std::size_t m = h.graph.order();
  out.survivors = m;
  std::vector<double> rho(m);
  parallel_for(m, options.threads, [&](std::size_t v) { rho[v] = radius_upper(ball(h.graph, v, s).graph); });

  const double e = 2.0 * static_cast<double>(s);
  std::vector<double> terms(m);
  bool lemma_holds = lambda > 1.0;
  const double cap = std::pow(lambda, 2.0 * static_cast<double>(r)) - 1.0;
  for (std::size_t v = 0; v < m; ++v) {
    terms[v] = std::pow(rho[v] / lambda, e);
    lemma_holds = lemma_holds && std::pow(rho[v], 2.0 * static_cast<double>(r)) <= cap;
  }
  out.trace_term = stable_sum(terms);
  out.bound = out.removed_high.size() + out.removed_net.size() + static_cast<std::size_t>(std::floor(out.trace_term));
  if (lemma_holds)
    out.closed_form = static_cast<double>(g.order()) *
                      std::pow(1.0 - std::pow(lambda, -2.0 * static_cast<double>(r)),
                               static_cast<double>(s) / static_cast<double>(r));
  if (options.validate) validate(g, out);
  return out;
}

MultiplicityBound certified_mult_upper_components(const Graph& g, double lambda, std::size_t r, std::size_t s,
                                                  const MultBoundOptions& options) {
  check_args(lambda, r, s);
  MultiplicityBound out;
  out.lambda = lambda;
  out.r = r;
  out.s = s;
  MultBoundOptions inner = options;
  inner.validate = false;
  for (const std::vector<Vertex>& comp : components(g)) {
    const Subgraph c = induced_subgraph(g, comp);
    const MultiplicityBound part = certified_mult_upper(c.graph, lambda, r, s, inner);
    for (Vertex v : part.removed_high) out.removed_high.push_back(c.host[v]);
    for (Vertex v : part.removed_net) out.removed_net.push_back(c.host[v]);
    out.trace_term += part.trace_term;
    out.bound += part.bound;
    out.survivors += part.survivors;
  }
  std::sort(out.removed_high.begin(), out.removed_high.end());
  std::sort(out.removed_net.begin(), out.removed_net.end());
  if (options.validate) validate(g, out);
  return out;
}

MultiplicityBound best_certified_mult_upper(const Graph& g, double lambda, const std::vector<std::size_t>& r_values,
                                            const std::vector<std::size_t>& s_values,
                                            const MultBoundOptions& options) {
  if (r_values.empty() || s_values.empty()) throw std::invalid_argument("best_certified_mult_upper: empty grid");
  MultBoundOptions inner = options;
  inner.validate = false;
  std::optional<MultiplicityBound> best;
  for (std::size_t r : r_values)
    for (std::size_t s : s_values) {
      MultiplicityBound b = certified_mult_upper(g, lambda, r, s, inner);
      if (!best || b.bound < best->bound) best = std::move(b);
    }
  if (options.validate) validate(g, *best);
  return *best;
}

Graph comb_fixture(std::size_t m) {
  if (m == 0) throw std::invalid_argument("comb_fixture: m must be at least 1");
  Graph g(3 * m);
  for (Vertex i = 0; i < m; ++i) {
    if (i + 1 < m) g.add_edge(i, i + 1);
    g.add_edge(i, m + 2 * i);
    g.add_edge(i, m + 2 * i + 1);
  }
  return g;
}

Graph k33_chain_fixture(std::size_t m) {
  if (m == 0) throw std::invalid_argument("k33_chain_fixture: m must be at least 1");
  Graph g(7 * m);
  for (Vertex i = 0; i < m; ++i) {
    if (i + 1 < m) g.add_edge(i, i + 1);
    const Vertex base = m + 6 * i;
    for (Vertex a = 0; a < 3; ++a)
      for (Vertex b = 3; b < 6; ++b) g.add_edge(base + a, base + b);
    g.add_edge(i, base);
    g.add_edge(i, base + 3);
  }
  return g;
}

nlohmann::json mult_bound_to_json(const MultiplicityBound& b) {
  nlohmann::json j{{"lambda", b.lambda},
                   {"r", b.r},
                   {"s", b.s},
                   {"removed_high", b.removed_high},
                   {"removed_net", b.removed_net},
                   {"trace_term", b.trace_term},
                   {"bound", b.bound},
                   {"survivors", b.survivors},
                   {"sound", b.sound}};
  j["closed_form"] = b.closed_form ? nlohmann::json(*b.closed_form) : nlohmann::json(nullptr);
  j["measured"] = b.measured ? nlohmann::json(*b.measured) : nlohmann::json(nullptr);
  return j;
}

}  // namespace eqlines
