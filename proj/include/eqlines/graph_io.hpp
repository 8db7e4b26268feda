#pragma once

// Graph JSON: {"n": int, "edges": [[u,v],...], "edge_types": [[u,v,"type_i"],...]}
// Edges are written sorted with u < v; "edge_types" only for typed graphs.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "eqlines/graph.hpp"

namespace eqlines {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);  // throws std::invalid_argument

std::string write_graph_json(const Graph& g);
Graph read_graph_json(const std::string& text);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace eqlines
