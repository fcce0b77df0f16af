#include "tempograph/dot.hpp"

#include <sstream>

namespace tempograph {

namespace {

std::string quoted(const VertexId& v) {
    std::string out = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_dot(const StaticGraph& s, const std::string& name) {
    std::ostringstream out;
    out << (s.directed ? "digraph " : "graph ") << name << " {\n";
    for (const auto& v : s.vertices) out << "  " << quoted(v) << ";\n";
    const char* link = s.directed ? " -> " : " -- ";
    for (const auto& [u, v] : s.arcs) out << "  " << quoted(u) << link << quoted(v) << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const TemporalGraph& g, const std::string& name) {
    std::ostringstream out;
    out << (g.directed ? "digraph " : "graph ") << name << " {\n";
    for (const auto& v : g.vertices) out << "  " << quoted(v) << ";\n";
    const char* link = g.directed ? " -> " : " -- ";
    for (const auto& e : g.edges) {
        std::string labels;
        for (const auto& t : e.labels) {
            if (!labels.empty()) labels += ',';
            labels += t.str();
        }
        out << "  " << quoted(e.tail) << link << quoted(e.head)
            << " [label=\"" << labels << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace tempograph
