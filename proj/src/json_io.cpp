#include "tempograph/json_io.hpp"

#include <fstream>

namespace tempograph {

using nlohmann::json;

json label_to_json(const Label& t) {
    if (t.is_integer()) return json(t.num());
    return json::array({t.num(), t.den()});
}

Label label_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return Rat(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    throw Error(Errc::ParseError, "label must be an integer or [num,den], got " + j.dump());
}

GraphDraft graph_draft_from_json(const json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "graph document must be a JSON object");
    GraphDraft d;
    if (!j.contains("directed") || !j["directed"].is_boolean())
        throw Error(Errc::ParseError, "missing boolean field 'directed'");
    d.directed = j["directed"].get<bool>();
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw Error(Errc::ParseError, "missing array field 'vertices'");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw Error(Errc::ParseError, "vertex ids must be strings");
        d.vertices.push_back(v.get<std::string>());
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw Error(Errc::ParseError, "'edges' must be an array");
        for (const auto& e : j["edges"]) {
            GraphDraft::Edge edge;
            if (!e.contains("from") || !e.contains("to") || !e.contains("labels"))
                throw Error(Errc::ParseError, "edge needs 'from', 'to' and 'labels'");
            edge.from = e["from"].get<std::string>();
            edge.to = e["to"].get<std::string>();
            for (const auto& l : e["labels"]) edge.labels.push_back(label_from_json(l));
            d.edges.push_back(std::move(edge));
        }
    }
    return d;
}

TemporalGraph graph_from_json(const json& j) {
    return validate_graph(graph_draft_from_json(j));
}

json graph_to_json(const TemporalGraph& g) {
    json j;
    j["directed"] = g.directed;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& e : g.edges) {
        json labels = json::array();
        for (const auto& t : e.labels) labels.push_back(label_to_json(t));
        edges.push_back({{"from", e.tail}, {"to", e.head}, {"labels", labels}});
    }
    j["edges"] = std::move(edges);
    return j;
}

StaticGraph static_from_json(const json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "static graph document must be a JSON object");
    StaticGraph s;
    s.directed = j.value("directed", true);
    if (j.contains("vertices"))
        for (const auto& v : j["vertices"]) s.vertices.push_back(v.get<std::string>());
    if (!j.contains("arcs") || !j["arcs"].is_array())
        throw Error(Errc::ParseError, "missing array field 'arcs'");
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2)
            throw Error(Errc::ParseError, "arcs must be [u,v] pairs");
        VertexId u = a[0].get<std::string>();
        VertexId v = a[1].get<std::string>();
        if (u == v) throw Error(Errc::SelfLoop, "arc at vertex '" + u + "'");
        s.arcs.push_back(s.directed ? std::make_pair(u, v) : canonical_pair(u, v));
        if (!j.contains("vertices")) {
            s.vertices.push_back(u);
            s.vertices.push_back(v);
        }
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    std::sort(s.arcs.begin(), s.arcs.end());
    s.arcs.erase(std::unique(s.arcs.begin(), s.arcs.end()), s.arcs.end());
    for (const auto& [u, v] : s.arcs) {
        if (!std::binary_search(s.vertices.begin(), s.vertices.end(), u))
            throw Error(Errc::UnknownVertex, "'" + u + "'");
        if (!std::binary_search(s.vertices.begin(), s.vertices.end(), v))
            throw Error(Errc::UnknownVertex, "'" + v + "'");
    }
    return s;
}

json static_to_json(const StaticGraph& s) {
    json j;
    j["directed"] = s.directed;
    j["vertices"] = s.vertices;
    json arcs = json::array();
    for (const auto& [u, v] : s.arcs) arcs.push_back({u, v});
    j["arcs"] = std::move(arcs);
    return j;
}

json arcs_to_json(const StaticGraph& s) {
    json arcs = json::array();
    for (const auto& [u, v] : s.arcs) arcs.push_back({u, v});
    return json{{"arcs", std::move(arcs)}};
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    return j;
}

} // namespace

TemporalGraph load_graph_file(const std::string& path) {
    return graph_from_json(parse_file(path));
}

StaticGraph load_static_file(const std::string& path) {
    return static_from_json(parse_file(path));
}

} // namespace tempograph
