#include "eqlines/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqlines {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.typed()) {
    json types = json::array();
    for (const auto& [u, v] : g.edges()) types.push_back({u, v, to_string(g.edge_type(u, v))});
    j["edge_types"] = std::move(types);
  }
  return j;
}

namespace {

Vertex vertex_at(const json& pair, std::size_t i, std::size_t n) {
  if (!pair.at(i).is_number_unsigned()) throw std::invalid_argument("graph json: vertex must be a nonnegative integer");
  const auto v = pair.at(i).get<std::size_t>();
  if (v >= n) throw std::invalid_argument("graph json: vertex out of range");
  return v;
}

}  // namespace

Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
      throw std::invalid_argument("graph json: expected object with \"n\" and \"edges\"");
    if (!j.at("n").is_number_unsigned()) throw std::invalid_argument("graph json: \"n\" must be a nonnegative integer");
    const auto n = j.at("n").get<std::size_t>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: edge must be [u, v]");
      const Vertex u = vertex_at(e, 0, n);
      const Vertex v = vertex_at(e, 1, n);
      if (u == v) throw std::invalid_argument("graph json: loop edge");
      g.add_edge(u, v);
    }
    if (j.contains("edge_types")) {
      g.make_typed();
      std::size_t labelled = 0;
      for (const auto& e : j.at("edge_types")) {
        if (!e.is_array() || e.size() != 3 || !e.at(2).is_string())
          throw std::invalid_argument("graph json: edge type must be [u, v, label]");
        const Vertex u = vertex_at(e, 0, n);
        const Vertex v = vertex_at(e, 1, n);
        if (!g.adjacent(u, v)) throw std::invalid_argument("graph json: edge type on a non-edge");
        g.add_edge(u, v, parse_edge_type(e.at(2).get<std::string>()));
        ++labelled;
      }
      if (labelled != g.edge_count()) throw std::invalid_argument("graph json: edge_types must label every edge");
    }
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
}

std::string write_graph_json(const Graph& g) { return graph_to_json(g).dump(); }

Graph read_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
  return graph_from_json(j);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_graph_json(buffer.str());
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write graph file: " + path.string());
  out << write_graph_json(g) << '\n';
}

}  // namespace eqlines
