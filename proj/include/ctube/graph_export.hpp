#pragma once

#include <string>

#include <json.hpp>

#include "ctube/cluster.hpp"
#include "ctube/tube.hpp"

namespace ctube {

/// {"nodes":[{"id","cluster","matrix"}],"edges":[{"from","dir","to"}],"variables":[...]}
/// Edge directions are 1-based.
nlohmann::ordered_json to_json(const ExchangeGraph& g);

/// Same shape; each node also carries "summands" [[a,b],...], its cluster is
/// the characters of the summands and its matrix is A_R.
nlohmann::ordered_json to_json(const RigidExchangeGraph& g);

/// Undirected DOT graph, nodes labeled by id and edges by 1-based direction.
std::string to_dot(const ExchangeGraph& g);
/// Nodes labeled by id and summands.
std::string to_dot(const RigidExchangeGraph& g);

}  // namespace ctube
