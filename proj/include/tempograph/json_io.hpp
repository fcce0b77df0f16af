#ifndef TEMPOGRAPH_JSON_IO_HPP
#define TEMPOGRAPH_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "tempograph/core.hpp"

namespace tempograph {

// Graph interchange format:
//   {"directed": bool, "vertices": [string...],
//    "edges": [{"from": s, "to": s, "labels": [int | [int,int]]}]}
// where [n,d] encodes the rational n/d.
GraphDraft graph_draft_from_json(const nlohmann::json& j);
TemporalGraph graph_from_json(const nlohmann::json& j); // parse + validate
nlohmann::json graph_to_json(const TemporalGraph& g);

// Static graphs (reachability output, realize targets):
//   {"directed": bool, "vertices": [...], "arcs": [[u,v],...]} sorted.
StaticGraph static_from_json(const nlohmann::json& j);
nlohmann::json static_to_json(const StaticGraph& s);
nlohmann::json arcs_to_json(const StaticGraph& s); // {"arcs": [[u,v],...]}

nlohmann::json label_to_json(const Label& t);
Label label_from_json(const nlohmann::json& j);

TemporalGraph load_graph_file(const std::string& path);
StaticGraph load_static_file(const std::string& path);

} // namespace tempograph

#endif
