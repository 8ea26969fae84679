#include "ctube/graph_export.hpp"

#include <algorithm>

#include "ctube/character.hpp"

namespace ctube {

namespace {

nlohmann::ordered_json matrix_json(const IntMatrix& a) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : a.rows()) rows.push_back(row);
  return rows;
}

nlohmann::ordered_json edges_json(const std::vector<GraphEdge>& edges) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : edges) out.push_back({{"from", e.from}, {"dir", e.dir + 1}, {"to", e.to}});
  return out;
}

nlohmann::ordered_json polys_json(const std::vector<LaurentPoly>& ps) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

std::string dot_edges(const std::vector<GraphEdge>& edges) {
  std::string out;
  for (const auto& e : edges) {
    out += "  n" + std::to_string(e.from) + " -- n" + std::to_string(e.to) + " [label=\"" +
           std::to_string(e.dir + 1) + "\"];\n";
  }
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const ExchangeGraph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    j["nodes"].push_back({{"id", v},
                          {"cluster", polys_json(g.nodes[v].cluster)},
                          {"matrix", matrix_json(g.nodes[v].matrix)}});
  }
  j["edges"] = edges_json(g.edges);
  j["variables"] = polys_json(g.variables);
  return j;
}

nlohmann::ordered_json to_json(const RigidExchangeGraph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const MaximalRigid& r = g.nodes[v];
    std::vector<LaurentPoly> cluster;
    for (const auto& s : r.summands()) cluster.push_back(x_closed_form(s));
    j["nodes"].push_back({{"id", v},
                          {"summands", to_json(r)["summands"]},
                          {"cluster", polys_json(cluster)},
                          {"matrix", matrix_json(exchange_matrix(r))}});
  }
  j["edges"] = edges_json(g.edges);
  std::vector<LaurentPoly> vars;
  for (const auto& x : rigid_indecomposables(g.rank)) vars.push_back(x_closed_form(x));
  std::sort(vars.begin(), vars.end());
  j["variables"] = polys_json(vars);
  return j;
}

std::string to_dot(const ExchangeGraph& g) {
  std::string out = "graph exchange {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
  }
  return out + dot_edges(g.edges) + "}\n";
}

std::string to_dot(const RigidExchangeGraph& g) {
  std::string out = "graph exchange {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + std::to_string(v) + ": " +
           to_string(g.nodes[v]) + "\"];\n";
  }
  return out + dot_edges(g.edges) + "}\n";
}

}  // namespace ctube
