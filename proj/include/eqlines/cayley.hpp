#pragma once

// Cayley graph of the affine group x -> a x + b over F_p, with the
// multiplicative generator edges kept as type_i and the additive ones as
// type_ii, and the subdivided variant with bounded degree.

#include <cstddef>
#include <cstdint>

#include <json.hpp>

#include "eqlines/graph.hpp"

namespace eqlines {

bool is_prime(std::uint64_t n);

// Smallest generator of the multiplicative group mod p. Throws for non-primes.
std::uint64_t primitive_root(std::uint64_t p);

struct AffElement {
  std::uint64_t a = 1;  // 1..p-1
  std::uint64_t b = 0;  // 0..p-1

  bool operator==(const AffElement&) const = default;
};

// x -> a x + b first, then x -> c x + d: (ac, bc + d).
AffElement compose(const AffElement& x, const AffElement& y, std::uint64_t p);
AffElement inverse(const AffElement& x, std::uint64_t p);

// Vertex index (a - 1) p + b.
Vertex aff_index(const AffElement& x, std::uint64_t p);
AffElement aff_element(Vertex v, std::uint64_t p);

// Edges {x, x s} for s in {(g, 0), (1, 1)} and their inverses. Throws for p < 5.
Graph aff_cayley(std::uint64_t p);

// Subgraph on the type_i edges only.
Graph type_i_subgraph(const Graph& g);

std::size_t default_subdivision(std::uint64_t p);  // ceil(log2 p)

// Each type_ii edge becomes a path of `length` edges; length 0 means the default.
Graph subdivided_aff(std::uint64_t p, std::size_t length = 0);

struct SecondMultiplicity {
  double lambda2 = 0.0;
  std::size_t multiplicity = 0;
  double target = 0.0;  // sqrt(n / log2 n)
  std::size_t n = 0;
};

// Throws std::invalid_argument for disconnected graphs or fewer than 2 vertices.
SecondMultiplicity measure_second_multiplicity(const Graph& g, double tol = 1e-8);

nlohmann::json second_multiplicity_to_json(const SecondMultiplicity& m);

}  // namespace eqlines
