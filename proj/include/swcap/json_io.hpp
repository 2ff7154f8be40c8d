#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "swcap/graph.hpp"

namespace swcap {

/// {"n": N, "edges": [[i, j, w], ...]} with i < j, one entry per edge.
inline nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
  return {{"n", g.node_count()}, {"edges", std::move(edges)}};
}

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<long long>();
    if (n < 2) throw ParamError("graph JSON: n must be >= 2");
    std::vector<Edge> edges;
    for (const auto& item : j.at("edges")) {
      if (!item.is_array() || item.size() != 3) throw ParamError("graph JSON: edges must be [i, j, w] triples");
      const auto u = item[0].get<long long>();
      const auto v = item[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParamError("graph JSON: edge endpoint out of range");
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), item[2].get<double>()});
    }
    return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParamError(std::string("graph JSON: ") + e.what());
  }
}

inline void write_graph_json(const WeightedGraph& g, std::ostream& out) { out << graph_to_json(g).dump() << '\n'; }

inline WeightedGraph read_graph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParamError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

}  // namespace swcap
