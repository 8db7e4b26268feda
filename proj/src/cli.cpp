#include "eqlines/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqlines/cayley.hpp"
#include "eqlines/exact.hpp"
#include "eqlines/graph_io.hpp"
#include "eqlines/k_order.hpp"
#include "eqlines/lines.hpp"
#include "eqlines/mult_bound.hpp"
#include "eqlines/spectra.hpp"
#include "eqlines/switching.hpp"

namespace eqlines::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The angle, given as alpha, as lambda, or as lambda's minimal polynomial plus an isolating interval.
struct AngleArgs {
  std::string alpha, lambda, minpoly, lo, hi;

  void attach(CLI::App* c) {
    c->add_option("--alpha", alpha, "alpha as p/q");
    c->add_option("--lambda", lambda, "lambda = (1 - alpha) / (2 alpha) as p/q");
    c->add_option("--lambda-minpoly", minpoly, "integer coefficients of lambda's minimal polynomial, constant first, comma separated");
    c->add_option("--lo", lo, "lower end of an interval isolating lambda");
    c->add_option("--hi", hi, "upper end of an interval isolating lambda");
  }

  bool given() const { return !alpha.empty() || !lambda.empty() || !minpoly.empty(); }

  AlgebraicReal lambda_value() const {
    const int forms = !alpha.empty() + !lambda.empty() + !minpoly.empty();
    if (forms != 1) throw UsageError("give exactly one of --alpha, --lambda, --lambda-minpoly");
    if (!alpha.empty()) return alpha_to_lambda(AlgebraicReal::from_rational(parse_rational(alpha)));
    if (!lambda.empty()) return AlgebraicReal::from_rational(parse_rational(lambda));
    if (lo.empty() || hi.empty()) throw UsageError("--lambda-minpoly needs --lo and --hi");
    std::vector<BigInt> coeffs;
    std::stringstream ss(minpoly);
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        coeffs.emplace_back(tok);
      } catch (const std::exception&) {
        throw UsageError("bad coefficient '" + tok + "' in --lambda-minpoly");
      }
    }
    return AlgebraicReal(IntPolynomial(std::move(coeffs)), parse_rational(lo), parse_rational(hi));
  }

  AlgebraicReal alpha_value() const {
    if (!alpha.empty() && lambda.empty() && minpoly.empty())
      return AlgebraicReal::from_rational(parse_rational(alpha));
    return lambda_to_alpha(lambda_value());
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

EnumerationBudget budget_from(std::size_t n_max, bool dedup, std::size_t threads) {
  EnumerationBudget b;
  b.n_max = n_max;
  b.dedup = dedup;
  b.threads = threads;
  return b;
}

std::size_t ceil_target(double t) { return static_cast<std::size_t>(std::ceil(t - 1e-12)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equiangular lines and eigenvalue multiplicity toolkit", "eqlines"};
  app.require_subcommand(1);
  std::size_t threads = 1;
  app.add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

  json payload;
  int code = kOk;
  bool raw_output = false;
  std::string raw;

  // korder
  AngleArgs k_angle;
  std::size_t k_nmax = 8;
  bool k_dedup = true;
  auto* korder = app.add_subcommand("korder", "spectral radius order k(lambda) with a witness graph");
  k_angle.attach(korder);
  korder->add_option("--nmax", k_nmax, "largest order searched")->capture_default_str();
  korder->add_option("--dedup", k_dedup, "enumerate up to isomorphism")->capture_default_str();
  korder->callback([&] {
    const AlgebraicReal lam = k_angle.lambda_value();
    const KOrderResult r = spectral_radius_order(lam, budget_from(k_nmax, k_dedup, threads));
    payload = korder_to_json(lam, r);
    if (r.exceeded()) code = kBudgetExceeded;
  });

  // construct
  AngleArgs c_angle;
  std::size_t c_d = 0, c_nmax = 8;
  std::string c_out;
  auto* construct = app.add_subcommand("construct", "optimal line family from k(lambda)");
  c_angle.attach(construct);
  construct->add_option("--d", c_d, "dimension")->required();
  construct->add_option("--nmax", c_nmax, "largest order searched for k(lambda)")->capture_default_str();
  construct->add_option("--out", c_out, "write the family as CSV here");
  construct->callback([&] {
    const Construction c = construct_optimal(c_angle.alpha_value(), c_d, budget_from(c_nmax, true, threads));
    payload = {{"d", c.family.d},  {"n", c.family.size()}, {"alpha", c.family.alpha},
               {"k", c.k},         {"ell", c.ell},         {"h", c.h},
               {"witness", graph_to_json(c.witness)},      {"optimality", c.optimality}};
    if (!c_out.empty()) {
      write_file(c_out, family_to_csv(c.family));
      payload["out"] = c_out;
    } else {
      payload["family"] = family_to_json(c.family);
    }
  });

  // verify
  AngleArgs v_angle;
  std::string v_family;
  double v_tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "check that a CSV family is equiangular");
  v_angle.attach(verify);
  verify->add_option("--family", v_family, "family CSV")->required();
  verify->add_option("--tol", v_tol, "tolerance on norms and inner products")->capture_default_str();
  verify->callback([&] {
    LineFamily f = family_from_csv(read_file(v_family));
    if (v_angle.given()) f.alpha = alpha_value(v_angle.alpha_value());
    const FamilyReport r = verify_family(f, v_tol);
    payload = report_to_json(r);
    payload["n"] = f.size();
    payload["d"] = f.d;
    payload["alpha"] = f.alpha;
    if (!r.valid) {
      code = kVerificationFailed;
      for (const auto& [i, j] : r.ambiguous_examples) err << "offending pair " << i << " " << j << "\n";
      if (r.max_norm_deviation > v_tol) err << "norm deviation " << r.max_norm_deviation << "\n";
    }
  });

  // nalpha
  AngleArgs n_angle;
  std::uint64_t n_d = 0;
  std::size_t n_nmax = 8;
  auto* nalpha = app.add_subcommand("nalpha", "N_alpha(d) from k(lambda)");
  n_angle.attach(nalpha);
  nalpha->add_option("--d", n_d, "dimension")->required()->check(CLI::PositiveNumber);
  nalpha->add_option("--nmax", n_nmax, "largest order searched for k(lambda)")->capture_default_str();
  nalpha->callback([&] {
    const AlgebraicReal lam = n_angle.lambda_value();
    const KOrderResult r = spectral_radius_order(lam, budget_from(n_nmax, true, threads));
    const NAlpha v = n_alpha_formula(r.k, n_d);
    payload = {{"d", n_d}, {"lambda", algebraic_to_json(lam)}};
    payload["k"] = r.k ? json(*r.k) : json(nullptr);
    if (v.value) {
      payload["value"] = *v.value;
    } else {
      payload["value"] = nullptr;
      payload["linear"] = true;  // d + o(d)
      payload["note"] = r.note.empty() ? "k(lambda) not found within the budget" : r.note;
      if (r.note.empty()) code = kBudgetExceeded;
    }
  });

  // gerzon
  std::uint64_t g_d = 0;
  auto* gerzon = app.add_subcommand("gerzon", "d(d+1)/2");
  gerzon->add_option("--d", g_d, "dimension")->required()->check(CLI::PositiveNumber);
  gerzon->callback([&] { payload = {{"d", g_d}, {"bound", gerzon_bound(g_d)}}; });

  // switch
  AngleArgs s_angle;
  std::string s_graph, s_family;
  auto* sw = app.add_subcommand("switch", "greedy switch toward bounded degree");
  s_angle.attach(sw);
  sw->add_option("--graph", s_graph, "negative graph JSON");
  sw->add_option("--family", s_family, "family CSV (its negative graph is used)");
  sw->callback([&] {
    if (s_graph.empty() == s_family.empty()) throw UsageError("give exactly one of --graph, --family");
    std::optional<double> alpha;
    Graph g(0);
    if (!s_graph.empty()) {
      g = load_graph(s_graph);
    } else {
      const LineFamily f = family_from_csv(read_file(s_family));
      g = negative_graph(f);
      alpha = f.alpha;
    }
    if (s_angle.given()) alpha = alpha_value(s_angle.alpha_value());
    const SwitchResult r = greedy_switch_bounded(g);
    payload = switch_to_json(r);
    if (alpha) {
      const CliqueCheck cc = clique_bound_check(r.switched, *alpha);
      payload["clique_bound_ok"] = cc.ok;
      payload["clique_limit"] = cc.limit;
    }
  });

  // multbound
  std::string m_graph, m_lambda = "second";
  std::optional<std::size_t> m_r, m_s;
  std::optional<double> m_c;
  auto* multbound = app.add_subcommand("multbound", "certified multiplicity upper bound");
  multbound->add_option("--graph", m_graph, "graph JSON")->required();
  multbound->add_option("--lambda", m_lambda, "'second' or a positive number")->capture_default_str();
  multbound->add_option("--r", m_r, "net radius")->check(CLI::PositiveNumber);
  multbound->add_option("--s", m_s, "ball radius")->check(CLI::PositiveNumber);
  multbound->add_option("--c", m_c, "constant in the default r, s")->check(CLI::PositiveNumber);
  multbound->callback([&] {
    const Graph g = load_graph(m_graph);
    if (g.order() < 2) throw UsageError("graph needs at least two vertices");
    double lam = 0;
    if (m_lambda == "second") {
      lam = lambda2(g);
    } else {
      try {
        std::size_t used = 0;
        lam = std::stod(m_lambda, &used);
        if (used != m_lambda.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw UsageError("--lambda must be 'second' or a number");
      }
    }
    if (!(lam > 0.0)) throw UsageError("lambda must be positive (got " + std::to_string(lam) + ")");
    const MultParams p = default_params(g.order(), max_degree(g), m_c);
    const std::size_t r = m_r.value_or(p.r);
    const std::size_t s = m_s.value_or(std::max(p.s, r));
    MultBoundOptions opt;
    opt.threads = threads;
    const MultiplicityBound b = certified_mult_upper_components(g, lam, r, s, opt);
    payload = mult_bound_to_json(b);
    payload["c"] = p.c;
    payload["n"] = g.order();
  });

  // net
  std::string net_graph;
  std::size_t net_r = 1, net_root = 0;
  auto* net = app.add_subcommand("net", "r-net by spanning-tree pruning");
  net->add_option("--graph", net_graph, "graph JSON")->required();
  net->add_option("--r", net_r, "radius")->required()->check(CLI::PositiveNumber);
  net->add_option("--root", net_root, "spanning tree root")->capture_default_str();
  net->callback([&] {
    const Graph g = load_graph(net_graph);
    const NetCertificate c = r_net(g, net_r, net_root);
    payload = {{"radius", c.radius},
               {"members", c.members},
               {"size", c.members.size()},
               {"size_bound", net_size_bound(g.order(), net_r)},
               {"covers", covers(g, c)}};
  });

  // spectrum
  std::string sp_graph;
  bool sp_json = false;
  auto* spectrum = app.add_subcommand("spectrum", "adjacency eigenvalues, descending");
  spectrum->add_option("--graph", sp_graph, "graph JSON")->required();
  spectrum->add_flag("--json", sp_json, "JSON instead of CSV");
  spectrum->callback([&] {
    const Spectrum s = graph_spectrum(load_graph(sp_graph));
    if (sp_json) {
      payload = spectrum_to_json(s);
    } else {
      raw_output = true;
      raw = spectrum_to_csv(s);
    }
  });

  // cayley-aff
  std::uint64_t ca_p = 0;
  std::size_t ca_l = 0;
  std::string ca_out;
  auto* cayley = app.add_subcommand("cayley-aff", "subdivided affine-group Cayley graph");
  cayley->add_option("--p", ca_p, "prime, at least 5")->required();
  cayley->add_option("--L", ca_l, "subdivision length (default ceil(log2 p))");
  cayley->add_option("--out", ca_out, "write the graph JSON here");
  cayley->callback([&] {
    const Graph g = subdivided_aff(ca_p, ca_l);
    if (ca_out.empty()) {
      payload = graph_to_json(g);
    } else {
      save_graph(g, ca_out);
      payload = {{"out", ca_out}, {"n", g.order()}, {"edges", g.edge_count()}, {"max_degree", max_degree(g)}};
    }
  });

  // measure
  std::string me_graph;
  auto* measure = app.add_subcommand("measure", "second eigenvalue and its multiplicity");
  measure->add_option("--graph", me_graph, "graph JSON")->required();
  measure->callback([&] {
    const SecondMultiplicity m = measure_second_multiplicity(load_graph(me_graph));
    payload = second_multiplicity_to_json(m);
    payload["meets_target"] = m.multiplicity >= ceil_target(m.target);
  });

  // random-graph
  std::size_t rg_n = 0, rg_deg = 4;
  double rg_density = 0.1;
  std::uint64_t rg_seed = 1;
  std::string rg_out;
  auto* random = app.add_subcommand("random-graph", "seeded random connected graph");
  random->add_option("--n", rg_n, "order")->required()->check(CLI::PositiveNumber);
  random->add_option("--maxdeg", rg_deg, "degree cap")->capture_default_str();
  random->add_option("--density", rg_density, "extra edge density")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  random->add_option("--seed", rg_seed, "RNG seed")->capture_default_str();
  random->add_option("--out", rg_out, "write the graph JSON here");
  random->callback([&] {
    std::mt19937_64 rng(rg_seed);
    const Graph g = random_connected_graph(rg_n, rg_deg, rg_density, rng);
    if (rg_out.empty()) {
      payload = graph_to_json(g);
    } else {
      save_graph(g, rg_out);
      payload = {{"out", rg_out}, {"n", g.order()}, {"edges", g.edge_count()}};
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (raw_output)
    out << raw;
  else
    out << payload.dump(2) << "\n";
  return code;
}

}  // namespace eqlines::cli
