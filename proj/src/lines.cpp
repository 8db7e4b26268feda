#include "eqlines/lines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "eqlines/kernels.hpp"
#include "eqlines/spectra.hpp"

namespace eqlines {

namespace {

constexpr std::size_t kAmbiguousExamples = 8;

double eigen_scale(const std::vector<double>& values) {
  return std::max(1.0, values.empty() ? 0.0 : values.front());
}

std::string format17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("line family: not a number: '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size() || !std::isfinite(x)) throw std::invalid_argument("line family: not a number: '" + s + "'");
  return x;
}

std::size_t parse_count(const std::string& s) {
  const double x = parse_double(s);
  if (x < 0 || x != std::floor(x)) throw std::invalid_argument("line family: not a count: '" + s + "'");
  return static_cast<std::size_t>(x);
}

}  // namespace

double alpha_value(const AlgebraicReal& alpha) {
  if (alpha.is_rational()) return alpha.rational_value().convert_to<double>();
  return alpha.refine(Rational(1, BigInt(1) << 64)).to_double();
}

Matrix gram_from_graph(const Graph& g, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("gram_from_graph: alpha must lie in (0, 1)");
  const std::size_t n = g.order();
  Matrix m(n, n, alpha);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = -alpha;
  return m;
}

Matrix gram_from_graph(const Graph& g, const AlgebraicReal& alpha) {
  if (alpha.compare(0) != std::strong_ordering::greater || alpha.compare(1) != std::strong_ordering::less)
    throw std::invalid_argument("gram_from_graph: alpha must lie in (0, 1)");
  return gram_from_graph(g, alpha_value(alpha));
}

PsdReport psd_rank(const Matrix& m, double tol) {
  const Spectrum s = eigen_sym(m);
  PsdReport r;
  if (s.values.empty()) {
    r.is_psd = true;
    return r;
  }
  const double cut = tol * eigen_scale(s.values);
  r.min_eigenvalue = s.values.back();
  r.is_psd = r.min_eigenvalue >= -tol;
  for (double x : s.values) {
    if (x > cut) ++r.rank;
    else if (std::abs(x) <= cut) ++r.nullity;
  }
  return r;
}

LineFamily realize(const Matrix& gram, std::size_t d, double alpha, double tol) {
  EigenOptions opt;
  opt.vectors = true;
  const EigenDecomposition e = eigen_decompose(gram, opt);
  const std::size_t n = gram.rows();
  if (n > 0 && e.values.back() < -tol)
    throw std::invalid_argument("realize: Gram matrix is not positive semidefinite (min eigenvalue " +
                                format17(e.values.back()) + ")");
  const double cut = tol * eigen_scale(e.values);
  std::size_t rank = 0;
  while (rank < n && e.values[rank] > cut) ++rank;
  if (rank > d)
    throw std::invalid_argument("realize: Gram rank " + std::to_string(rank) + " exceeds d = " + std::to_string(d));

  LineFamily f;
  f.d = d;
  f.alpha = alpha;
  f.vectors = Matrix(n, d);
  for (std::size_t c = 0; c < rank; ++c) {
    const double scale = std::sqrt(e.values[c]);
    for (std::size_t i = 0; i < n; ++i) f.vectors(i, c) = e.vectors(c, i) * scale;
  }
  return f;
}

Construction construct_optimal(const AlgebraicReal& alpha, std::size_t d, const EnumerationBudget& budget) {
  if (alpha.compare(0) != std::strong_ordering::greater || alpha.compare(1) != std::strong_ordering::less)
    throw std::invalid_argument("construct_optimal: alpha must lie in (0, 1)");
  const KOrderResult order = spectral_radius_order(alpha_to_lambda(alpha), budget);
  if (order.exceeded())
    throw BudgetExceeded("k(lambda) not found with at most " + std::to_string(budget.n_max) + " vertices" +
                         (order.note.empty() ? "" : " (" + order.note + ")"));
  Construction c;
  c.k = *order.k;
  c.witness = *order.witness;
  if (d < c.k)
    throw std::invalid_argument("construct_optimal: d = " + std::to_string(d) + " is below k = " + std::to_string(c.k));
  c.ell = (d - 1) / (c.k - 1);
  c.h = (d - 1) - (c.k - 1) * c.ell;
  std::vector<Graph> parts(c.ell, c.witness);
  parts.insert(parts.end(), c.h, Graph(1));
  c.graph = disjoint_union(parts);

  const double a = alpha_value(alpha);
  c.family = realize(gram_from_graph(c.graph, a), d, a);
  c.family.alpha_exact = alpha;
  if (c.k == 2)
    c.optimality = "maximum for d >= 15";
  else
    c.optimality = "maximum for d >= d0(k); below that only a lower bound";
  return c;
}

FamilyReport verify_family(const LineFamily& f, double tol) {
  if (f.vectors.cols() != f.d) throw std::invalid_argument("verify_family: rows must have d coordinates");
  const kernels::KernelTable& k = kernels::active();
  const std::size_t n = f.size();
  FamilyReport r;
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* vi = f.vectors.row(i).data();
    r.max_norm_deviation = std::max(r.max_norm_deviation, std::abs(std::sqrt(k.dot(vi, vi, f.d)) - 1.0));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ip = std::abs(k.dot(vi, f.vectors.row(j).data(), f.d));
      sum += ip;
      const double dev = std::abs(ip - f.alpha);
      r.max_inner_product_deviation = std::max(r.max_inner_product_deviation, dev);
      if (dev > tol) {
        ++r.ambiguous_pairs;
        if (r.ambiguous_examples.size() < kAmbiguousExamples) r.ambiguous_examples.emplace_back(i, j);
      }
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - (n > 0)) / 2.0;
  r.alpha_recovered = pairs > 0 ? sum / pairs : f.alpha;
  r.valid = r.max_norm_deviation <= tol && r.ambiguous_pairs == 0;
  return r;
}

Graph negative_graph(const LineFamily& f) {
  const kernels::KernelTable& k = kernels::active();
  Graph g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (k.dot(f.vectors.row(i).data(), f.vectors.row(j).data(), f.vectors.cols()) < 0) g.add_edge(i, j);
  return g;
}

std::uint64_t gerzon_bound(std::uint64_t d) { return d * (d + 1) / 2; }

bool tensor_independence(const LineFamily& f, double tol) {
  const std::size_t n = f.size(), d = f.vectors.cols();
  if (n == 0) return true;
  if (n > d * d) return false;
  Matrix t(n, d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) t(i, a * d + b) = f.vectors(i, a) * f.vectors(i, b);
  const PsdReport r = psd_rank(multiply_transposed(t, t), tol);
  return r.rank == n;
}

NAlpha n_alpha_formula(std::optional<std::size_t> k, std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("n_alpha_formula: d must be at least 1");
  if (!k) return {};
  if (*k < 2) throw std::invalid_argument("n_alpha_formula: k must be at least 2");
  return {static_cast<std::uint64_t>(*k) * (d - 1) / (*k - 1)};
}

NAlpha n_alpha(const AlgebraicReal& alpha, std::uint64_t d, const EnumerationBudget& budget) {
  const KOrderResult r = spectral_radius_order(alpha_to_lambda(alpha), budget);
  return n_alpha_formula(r.k, d);
}

LineFamily icosahedron_family() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double raw[6][3] = {{0, 1, phi}, {0, 1, -phi}, {1, phi, 0}, {1, -phi, 0}, {phi, 0, 1}, {-phi, 0, 1}};
  const double norm = std::sqrt(1.0 + phi * phi);
  LineFamily f;
  f.d = 3;
  f.vectors = Matrix(6, 3);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 3; ++j) f.vectors(i, j) = raw[i][j] / norm;
  f.alpha_exact = AlgebraicReal(IntPolynomial{-1, 0, 5}, 0, 1);
  f.alpha = alpha_value(*f.alpha_exact);
  return f;
}

GramAudit audit_gram(const Matrix& gram, const Graph& negative, double lambda, double tol) {
  const PsdReport p = psd_rank(gram, tol);
  GramAudit a;
  a.n = gram.rows();
  a.rank = p.rank;
  a.nullity = p.nullity;
  const Spectrum s = graph_spectrum(negative);
  a.multiplicity = multiplicity(s, lambda, s.cluster_tol);
  a.rank_nullity_ok = a.rank + a.nullity == a.n;
  a.nullity_bound_ok = a.nullity <= a.multiplicity + 1;
  return a;
}

std::string family_to_csv(const LineFamily& f) {
  std::string out = "d,alpha_float,n\n";
  out += std::to_string(f.d) + "," + format17(f.alpha) + "," + std::to_string(f.size()) + "\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.vectors.cols(); ++j) {
      if (j) out += ',';
      out += format17(f.vectors(i, j));
    }
    out += '\n';
  }
  return out;
}

LineFamily family_from_csv(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() < 2 || lines[0] != "d,alpha_float,n")
    throw std::invalid_argument("line family csv: expected header 'd,alpha_float,n'");
  const auto head = split_commas(lines[1]);
  if (head.size() != 3) throw std::invalid_argument("line family csv: second line needs d,alpha_float,n");
  LineFamily f;
  f.d = parse_count(head[0]);
  f.alpha = parse_double(head[1]);
  const std::size_t n = parse_count(head[2]);
  if (lines.size() != n + 2)
    throw std::invalid_argument("line family csv: expected " + std::to_string(n) + " vector rows, found " +
                                std::to_string(lines.size() - 2));
  f.vectors = Matrix(n, f.d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto cells = split_commas(lines[i + 2]);
    if (cells.size() != f.d)
      throw std::invalid_argument("line family csv: row " + std::to_string(i) + " does not have d coordinates");
    for (std::size_t j = 0; j < f.d; ++j) f.vectors(i, j) = parse_double(cells[j]);
  }
  return f;
}

nlohmann::json family_to_json(const LineFamily& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto r = f.vectors.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  nlohmann::json j{{"d", f.d}, {"alpha_float", f.alpha}, {"n", f.size()}, {"vectors", rows}};
  if (f.alpha_exact) j["alpha"] = algebraic_to_json(*f.alpha_exact);
  return j;
}

LineFamily family_from_json(const nlohmann::json& j) {
  try {
    LineFamily f;
    f.d = j.at("d").get<std::size_t>();
    f.alpha = j.at("alpha_float").get<double>();
    const auto& rows = j.at("vectors");
    const std::size_t n = j.at("n").get<std::size_t>();
    if (rows.size() != n) throw std::invalid_argument("n does not match the number of vectors");
    f.vectors = Matrix(n, f.d);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != f.d) throw std::invalid_argument("vector without d coordinates");
      for (std::size_t c = 0; c < f.d; ++c) f.vectors(i, c) = rows[i][c].get<double>();
    }
    if (j.contains("alpha")) f.alpha_exact = algebraic_from_json(j["alpha"]);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("line family json: ") + e.what());
  }
}

nlohmann::json report_to_json(const FamilyReport& r) {
  nlohmann::json amb = nlohmann::json::array();
  for (auto [i, j] : r.ambiguous_examples) amb.push_back({i, j});
  return {{"valid", r.valid},
          {"max_norm_deviation", r.max_norm_deviation},
          {"max_inner_product_deviation", r.max_inner_product_deviation},
          {"alpha_recovered", r.alpha_recovered},
          {"ambiguous_pairs", r.ambiguous_pairs},
          {"ambiguous_examples", amb}};
}

}  // namespace eqlines
