#pragma once

#include <json.hpp>

#include "csf/graph.hpp"
#include "csf/nsym.hpp"
#include "csf/sym.hpp"

namespace csf {

/// {"basis":"e","terms":[{"partition":[5],"num":"15","den":"1"}, ...]}
nlohmann::json to_json(const SymPoly& f);
/// Same shape with "composition" keys.
nlohmann::json to_json(const NSymPoly& f);
/// {"n":3,"edges":[[0,1],[1,2]]}
nlohmann::json to_json(const Graph& g);

SymPoly sym_from_json(const nlohmann::json& j);
NSymPoly nsym_from_json(const nlohmann::json& j);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace csf
