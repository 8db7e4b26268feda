#pragma once

// Certified upper bounds on the multiplicity of an eigenvalue lambda > 0:
// remove vertices with a large local spectral radius, remove an r-net from
// what is left, bound the rest by a trace of local radii, and pay one per
// removed vertex (interlacing).

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "eqlines/graph.hpp"

namespace eqlines {

struct MultParams {
  std::size_t r = 1;
  std::size_t s = 1;
  double c = 0.0;
};

// r = ceil(c ln ln n), s = ceil(c ln n), both at least 1 and s >= r.
// c defaults to 1 / (4 ln(delta + 1)).
MultParams default_params(std::size_t n, std::size_t delta, std::optional<double> c = std::nullopt);

// {v : lambda_1(B(v, s + 1)) > lambda + 1e-9}.
std::vector<Vertex> high_radius_vertices(const Graph& g, double lambda, std::size_t s, std::size_t threads = 1);

// High-radius vertices at lambda_2(g) lie pairwise within distance 2s + 2.
// Only 2s + 3 is guaranteed: the endpoints of P_{2s+4} sit at 2s + 3.
bool cluster_distance_check(const Graph& g, std::size_t s);
// Largest pairwise distance among the high-radius vertices at lambda_2(g), 0 if fewer than two.
std::size_t high_radius_spread(const Graph& g, std::size_t s);

// lambda_1(H)^{2r} <= lambda_1(G)^{2r} - 1 (+1e-7) with H = g minus r_net(g, r).
bool net_removal_radius_check(const Graph& g, std::size_t r);

// trace(A^{2s}) (exact) <= sum over v of lambda_1(B(v, s))^{2s}, 1e-6 relative slack.
bool local_global_check(const Graph& g, std::size_t s);

struct MultBoundOptions {
  std::size_t threads = 1;
  bool validate = true;  // compare against the numerically measured multiplicity
};

struct MultiplicityBound {
  double lambda = 0.0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<Vertex> removed_high;
  std::vector<Vertex> removed_net;
  double trace_term = 0.0;  // sum over survivors of (rho_v / lambda)^{2s}
  std::size_t bound = 0;    // |removed_high| + |removed_net| + floor(trace_term)
  std::size_t survivors = 0;
  // n (1 - lambda^{-2r})^{s/r}, reported when every survivor ball satisfies
  // rho^{2r} <= lambda^{2r} - 1.
  std::optional<double> closed_form;
  std::optional<std::size_t> measured;  // mult(lambda, g) when validated
  bool sound = true;                    // bound >= measured
};

// Throws std::invalid_argument for lambda <= 0, r or s zero, or disconnected g.
MultiplicityBound certified_mult_upper(const Graph& g, double lambda, std::size_t r, std::size_t s,
                                       const MultBoundOptions& options = {});

// Sum of certified_mult_upper over the components of g.
MultiplicityBound certified_mult_upper_components(const Graph& g, double lambda, std::size_t r, std::size_t s,
                                                  const MultBoundOptions& options = {});

// Smallest certified bound over the (r, s) grid; each grid point is itself a
// certificate, so the minimum is one too.
MultiplicityBound best_certified_mult_upper(const Graph& g, double lambda, const std::vector<std::size_t>& r_values,
                                            const std::vector<std::size_t>& s_values,
                                            const MultBoundOptions& options = {});

// Spine path 0..m-1; spine vertex i carries leaves m + 2i and m + 2i + 1.
Graph comb_fixture(std::size_t m);
// Spine path 0..m-1; spine vertex i joins the first vertex on each side of a
// K_{3,3} gadget on m + 6i .. m + 6i + 5 (sides {+0,+1,+2} and {+3,+4,+5}).
Graph k33_chain_fixture(std::size_t m);

nlohmann::json mult_bound_to_json(const MultiplicityBound& b);

}  // namespace eqlines
