#include "eqlines/cayley.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlines/spectra.hpp"

namespace eqlines {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

void require_prime(std::uint64_t p, std::uint64_t least, const char* who) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
  if (p < least) throw std::invalid_argument(std::string(who) + ": p must be at least " + std::to_string(least));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  require_prime(p, 2, "primitive_root");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

AffElement compose(const AffElement& x, const AffElement& y, std::uint64_t p) {
  return {mulmod(x.a, y.a, p), (mulmod(x.b, y.a, p) + y.b) % p};
}

AffElement inverse(const AffElement& x, std::uint64_t p) {
  const std::uint64_t ai = powmod(x.a, p - 2, p);
  return {ai, mulmod(p - x.b, ai, p) % p};
}

Vertex aff_index(const AffElement& x, std::uint64_t p) { return static_cast<Vertex>((x.a - 1) * p + x.b); }

AffElement aff_element(Vertex v, std::uint64_t p) { return {v / p + 1, v % p}; }

Graph aff_cayley(std::uint64_t p) {
  require_prime(p, 5, "aff_cayley");
  const std::size_t n = static_cast<std::size_t>(p * (p - 1));
  Graph g(n);
  g.make_typed();
  const AffElement s1{primitive_root(p), 0};
  const AffElement s2{1, 1};
  for (Vertex v = 0; v < n; ++v) {
    const AffElement x = aff_element(v, p);
    const Vertex u1 = aff_index(compose(x, s1, p), p);
    const Vertex u2 = aff_index(compose(x, s2, p), p);
    // inverse generators give the same undirected edges from the other end
    if (!g.adjacent(v, u1)) g.add_edge(v, u1, EdgeType::type_i);
    if (!g.adjacent(v, u2)) g.add_edge(v, u2, EdgeType::type_ii);
  }
  return g;
}

Graph type_i_subgraph(const Graph& g) {
  Graph out(g.order());
  out.make_typed();
  for (const Edge& e : g.edges_of_type(EdgeType::type_i)) out.add_edge(e.first, e.second, EdgeType::type_i);
  return out;
}

std::size_t default_subdivision(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("default_subdivision: p must be at least 2");
  return static_cast<std::size_t>(std::bit_width(p - 1));
}

Graph subdivided_aff(std::uint64_t p, std::size_t length) {
  const Graph g = aff_cayley(p);
  return subdivide_edges(g, EdgeType::type_ii, length == 0 ? default_subdivision(p) : length);
}

SecondMultiplicity measure_second_multiplicity(const Graph& g, double tol) {
  if (g.order() < 2) throw std::invalid_argument("measure_second_multiplicity: needs at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("measure_second_multiplicity: graph is disconnected");
  const Spectrum spec = graph_spectrum(g, tol);
  SecondMultiplicity out;
  out.n = g.order();
  out.lambda2 = spec.values[1];
  out.multiplicity = multiplicity(spec, out.lambda2, tol);
  const double n = static_cast<double>(out.n);
  out.target = std::sqrt(n / std::log2(n));
  return out;
}

nlohmann::json second_multiplicity_to_json(const SecondMultiplicity& m) {
  return {{"n", m.n},
          {"lambda2", m.lambda2},
          {"multiplicity", m.multiplicity},
          {"target", m.target},
          {"target_ceil", static_cast<std::size_t>(std::ceil(m.target - 1e-12))}};
}

}  // namespace eqlines
