#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "eqlines/spectra.hpp"
#include "fixtures.hpp"

namespace {

using namespace eqlines;
using eqlines::testing::complete;
using eqlines::testing::copies;
using eqlines::testing::k2;
using eqlines::testing::path;
using eqlines::testing::star;
using eqlines::testing::triangle;

void expect_values(const Spectrum& s, std::vector<double> want, double tol = 1e-12) {
  ASSERT_EQ(s.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(s.values[i], want[i], tol) << i;
}

std::vector<double> eigen_oracle(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(v.rbegin(), v.rend());
  return v;
}

Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = gauss(rng);
  return m;
}

TEST(EigenSym, Examples) {
  expect_values(graph_spectrum(k2()), {1, -1});
  expect_values(graph_spectrum(triangle()), {2, -1, -1});
  expect_values(graph_spectrum(path(3)), {std::sqrt(2.0), 0, -std::sqrt(2.0)});
  expect_values(graph_spectrum(path(1)), {0});
}

TEST(EigenSym, RejectsBadInput) {
  Matrix m(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(eigen_sym(m), std::invalid_argument);
  m(1, 0) = 1;
  m(0, 0) = std::nan("");
  EXPECT_THROW(eigen_sym(m), std::invalid_argument);
  EXPECT_THROW(eigen_sym(Matrix(2, 3)), std::invalid_argument);
}

TEST(EigenSym, MatchesEigenOracle) {
  std::mt19937_64 rng(8);
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u, 90u}) {
    const Matrix m = random_symmetric(n, rng);
    const auto want = eigen_oracle(m);
    const double scale = std::max(1.0, std::abs(want.front()) + std::abs(want.back()));
    expect_values(eigen_sym(m), want, 1e-9 * scale);
  }
}

TEST(EigenSym, BothSolversAgree) {
  std::mt19937_64 rng(12);
  for (std::size_t n : {3u, 20u, 64u, 130u}) {
    const Matrix m = random_symmetric(n, rng);
    const auto jac = detail::jacobi_eigen(m, false).values;
    const auto ql = detail::tridiagonal_ql_eigen(m, false).values;
    ASSERT_EQ(jac.size(), ql.size());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(jac[i], ql[i], 1e-9 * n);
  }
  // Graph adjacency above the Jacobi threshold goes through QL.
  const Graph g = copies(triangle(), 200);
  const Spectrum s = graph_spectrum(g);
  EXPECT_EQ(multiplicity(s, 2, 1e-8), 200u);
  EXPECT_EQ(multiplicity(s, -1, 1e-8), 400u);
}

TEST(EigenSym, Eigenvectors) {
  std::mt19937_64 rng(3);
  for (std::size_t order_cap : {512u, 1u}) {
    const Matrix m = random_symmetric(25, rng);
    EigenOptions opt;
    opt.vectors = true;
    opt.jacobi_max_order = order_cap;
    const EigenDecomposition d = eigen_decompose(m, opt);
    for (std::size_t k = 0; k < 25; ++k) {
      double norm = 0;
      for (std::size_t i = 0; i < 25; ++i) {
        double av = 0;
        for (std::size_t j = 0; j < 25; ++j) av += m(i, j) * d.vectors(k, j);
        EXPECT_NEAR(av, d.values[k] * d.vectors(k, i), 1e-9);
        norm += d.vectors(k, i) * d.vectors(k, i);
      }
      EXPECT_NEAR(norm, 1.0, 1e-12);
    }
  }
}

TEST(EigenSym, Deterministic) {
  const auto graphs = eqlines::testing::random_connected(5, 50, 80, 5, 1);
  for (const auto& g : graphs) EXPECT_EQ(graph_spectrum(g).values, graph_spectrum(g).values);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(graph_spectrum(triangle()), -1, 1e-8), 2u);
  for (std::size_t n = 2; n <= 9; ++n) EXPECT_EQ(multiplicity(graph_spectrum(complete(n)), -1, 1e-8), n - 1);
  for (std::size_t half = 1; half <= 8; ++half)
    EXPECT_EQ(multiplicity(graph_spectrum(copies(k2(), half)), 1, 1e-8), half);
}

TEST(Multiplicity, ReportsGap) {
  const Spectrum s = graph_spectrum(triangle());
  const MultiplicityReport r = multiplicity_report(s, -1, 1e-8);
  EXPECT_EQ(r.count, 2u);
  EXPECT_NEAR(r.gap, 3.0, 1e-12);
  EXPECT_FALSE(r.ill_separated);
  const MultiplicityReport close = multiplicity_report(Spectrum{{1.0, 1.0 + 5e-8}, 1e-8}, 1.0, 1e-8);
  EXPECT_EQ(close.count, 1u);
  EXPECT_TRUE(close.ill_separated);
  const MultiplicityReport all = multiplicity_report(Spectrum{{1.0, 1.0}, 1e-8}, 1.0, 1e-8);
  EXPECT_TRUE(std::isinf(all.gap));
}

TEST(Clusters, GroupsValues) {
  const auto c = clusters(graph_spectrum(complete(5)));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].multiplicity, 1u);
  EXPECT_EQ(c[1].multiplicity, 4u);
  EXPECT_NEAR(c[1].center, -1, 1e-12);
}

TEST(Lambda, Examples) {
  EXPECT_NEAR(lambda1(triangle()), 2, 1e-12);
  EXPECT_NEAR(lambda2(triangle()), -1, 1e-12);
  EXPECT_NEAR(lambda1(k2()), 1, 1e-12);
  EXPECT_NEAR(lambda2(k2()), -1, 1e-12);
  EXPECT_NEAR(lambda1(copies(k2(), 2)), 1, 1e-12);
  EXPECT_NEAR(lambda2(copies(k2(), 2)), 1, 1e-12);
  EXPECT_THROW(lambda2(path(1)), std::invalid_argument);
}

TEST(LocalRadius, Examples) {
  EXPECT_NEAR(local_radius(path(7), 0, 1), 1, 1e-12);
  for (Vertex v = 0; v < 4; ++v) EXPECT_NEAR(local_radius(complete(4), v, 1), 3, 1e-12);
  EXPECT_NEAR(local_radius(star(4), 0, 1), 2, 1e-12);
}

TEST(RadiusBounds, BracketLambda1) {
  for (const auto& g : eqlines::testing::random_connected(60, 1, 70, 6, 9)) {
    const double exact = lambda1(g);
    const RadiusBounds b = spectral_radius_bounds(g);
    EXPECT_LE(b.lower, exact + 1e-9);
    EXPECT_GE(b.upper, exact - 1e-9);
    EXPECT_LE(b.upper - b.lower, 1e-6 * std::max(1.0, exact));
  }
  // The upper bound survives early stopping.
  const Graph g = path(40);
  EXPECT_GE(spectral_radius_bounds(g, 1e-12, 3).upper, lambda1(g) - 1e-12);
}

TEST(ClosedWalks, Examples) {
  EXPECT_EQ(closed_walks(k2(), 0, 2), 1);
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_EQ(closed_walks(triangle(), v, 2), 2);
    EXPECT_EQ(closed_walks(triangle(), v, 4), 6);
  }
  EXPECT_EQ(closed_walks(triangle(), 0, 0), 1);
  EXPECT_THROW(closed_walks(triangle(), 0, 3), std::invalid_argument);
}

TEST(ClosedWalks, PowerTraceMatchesSpectrum) {
  for (const auto& g : eqlines::testing::random_connected(40, 1, 30, 6, 21)) {
    const Spectrum s = graph_spectrum(g);
    for (std::size_t half = 1; half <= 6; ++half) {
      double numeric = 0;
      for (double l : s.values) numeric += std::pow(l, 2.0 * half);
      const double exact = total_closed_walks(g, 2 * half).convert_to<double>();
      EXPECT_NEAR(numeric, exact, 1e-6 * std::max(1.0, exact));
    }
  }
}

TEST(Spectrum, TraceIdentity) {
  for (const auto& g : eqlines::testing::random_connected(60, 1, 80, 7, 6)) {
    double sum = 0;
    for (double l : graph_spectrum(g).values) sum += l * l;
    const double want = 2.0 * g.edge_count();
    EXPECT_NEAR(sum, want, 1e-6 * std::max(1.0, want));
  }
}

TEST(Spectrum, Lambda1MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(55);
  for (const auto& g : eqlines::testing::random_connected(60, 3, 40, 6, 13)) {
    std::uniform_int_distribution<Vertex> pick(0, g.order() - 1);
    Vertex u = pick(rng), v = pick(rng);
    if (u == v || g.adjacent(u, v)) continue;
    Graph h = g;
    h.add_edge(u, v);
    EXPECT_GE(lambda1(h), lambda1(g) - 1e-10);
  }
}

TEST(Interlacing, Examples) {
  EXPECT_TRUE(interlacing_check(complete(4), 0));
  EXPECT_TRUE(interlacing_check(path(3), 0));
  EXPECT_TRUE(interlacing_check(k2(), 1));
  EXPECT_FALSE(interlaces(Spectrum{{2, 0}, 1e-8}, Spectrum{{3}, 1e-8}));
}

TEST(Interlacing, RandomPairs) {
  std::mt19937_64 rng(70);
  for (const auto& g : eqlines::testing::random_connected(100, 2, 40, 6, 71)) {
    const Vertex v = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
    EXPECT_TRUE(interlacing_check(g, v));
  }
}

TEST(SpectrumIo, CsvAndJson) {
  const Spectrum s = graph_spectrum(path(3));
  const std::string csv = spectrum_to_csv(s);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "1.4142135623730951");
  const auto j = spectrum_to_json(graph_spectrum(triangle()));
  EXPECT_EQ(j.at("values").size(), 3u);
  EXPECT_EQ(j.at("clusters").size(), 2u);
  EXPECT_NEAR(j.at("min_cluster_gap").get<double>(), 3.0, 1e-12);
}

}  // namespace
