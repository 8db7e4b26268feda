#include <gtest/gtest.h>

#include <cmath>

#include "eqlines/cayley.hpp"
#include "eqlines/spectra.hpp"
#include "fixtures.hpp"

namespace {

using namespace eqlines;

// Frozen from tests/oracles/cayley_oracle.py (numpy eigvalsh).
struct OracleRow {
  std::uint64_t p;
  std::size_t n;
  std::size_t mult;
  double lambda2;
};
constexpr OracleRow kOracle[] = {
    {5, 60, 4, 2.764253216570444},
    {7, 126, 6, 2.786114924224500},
    {11, 440, 10, 2.819737938752530},
    {13, 624, 12, 2.821624195381779},
};

TEST(Primes, RootsAndPrimality) {
  EXPECT_EQ(primitive_root(5), 2u);
  EXPECT_EQ(primitive_root(7), 3u);
  EXPECT_EQ(primitive_root(3), 2u);
  EXPECT_EQ(primitive_root(13), 2u);
  EXPECT_EQ(primitive_root(23), 5u);
  EXPECT_THROW(primitive_root(9), std::invalid_argument);
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(AffGroup, AssociativeWithInverses) {
  const std::uint64_t p = 5;
  std::vector<AffElement> all;
  for (std::uint64_t a = 1; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) all.push_back({a, b});
  for (const AffElement& x : all) {
    EXPECT_EQ(aff_element(aff_index(x, p), p), x);
    EXPECT_EQ(compose(x, inverse(x, p), p), (AffElement{1, 0}));
    for (const AffElement& y : all)
      for (const AffElement& z : all)
        ASSERT_EQ(compose(compose(x, y, p), z, p), compose(x, compose(y, z, p), p));
  }
  // x -> 2x, then x -> x + 1
  const AffElement c = compose({2, 0}, {1, 1}, p);
  EXPECT_EQ(c, (AffElement{2, 1}));
}

TEST(AffCayley, Shape) {
  const Graph g = aff_cayley(5);
  EXPECT_EQ(g.order(), 20u);
  EXPECT_EQ(g.edge_count(), 40u);
  EXPECT_TRUE(is_connected(g));
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.degree(v), 4u);
  EXPECT_EQ(g.edges_of_type(EdgeType::type_i).size(), 20u);
  EXPECT_EQ(g.edges_of_type(EdgeType::type_ii).size(), 20u);
  EXPECT_EQ(aff_cayley(7).order(), 42u);
  EXPECT_THROW(aff_cayley(3), std::invalid_argument);
  EXPECT_THROW(aff_cayley(9), std::invalid_argument);
}

TEST(AffCayley, TypeIComponents) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    const Graph t = type_i_subgraph(aff_cayley(p));
    const auto comps = components(t);
    ASSERT_EQ(comps.size(), p);
    for (const auto& c : comps) EXPECT_EQ(c.size(), p - 1);
    const Spectrum spec = graph_spectrum(t);
    EXPECT_EQ(multiplicity(spec, spec.values[0], 1e-8), p);
  }
}

TEST(Subdivided, Sizes) {
  EXPECT_EQ(default_subdivision(5), 3u);
  EXPECT_EQ(default_subdivision(13), 4u);
  EXPECT_EQ(default_subdivision(8), 3u);
  EXPECT_EQ(subdivided_aff(5, 3).order(), 60u);
  EXPECT_EQ(subdivided_aff(5, 1), aff_cayley(5));
  const Graph g = subdivided_aff(13);
  EXPECT_EQ(g.order(), 624u);
  EXPECT_EQ(max_degree(g), 4u);
  EXPECT_TRUE(is_connected(g));
}

TEST(Measure, MatchesOracle) {
  for (const OracleRow& row : kOracle) {
    const Graph g = subdivided_aff(row.p);
    ASSERT_EQ(g.order(), row.n);
    const SecondMultiplicity m = measure_second_multiplicity(g);
    EXPECT_EQ(m.multiplicity, row.mult) << row.p;
    EXPECT_NEAR(m.lambda2, row.lambda2, 1e-9) << row.p;
    EXPECT_GE(m.multiplicity, static_cast<std::size_t>(std::ceil(m.target))) << row.p;
  }
}

TEST(Measure, Calibration) {
  const SecondMultiplicity k = measure_second_multiplicity(eqlines::testing::complete(7));
  EXPECT_NEAR(k.lambda2, -1.0, 1e-12);
  EXPECT_EQ(k.multiplicity, 6u);
  EXPECT_THROW(measure_second_multiplicity(eqlines::testing::copies(eqlines::testing::k2(), 2)),
               std::invalid_argument);
  const nlohmann::json j = second_multiplicity_to_json(k);
  EXPECT_EQ(j["multiplicity"], 6);
}

}  // namespace
