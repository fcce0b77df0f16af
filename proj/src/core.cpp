#include "tempograph/core.hpp"

#include <algorithm>
#include <map>

namespace tempograph {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SelfLoop: return "SELF_LOOP";
        case Errc::UnknownVertex: return "UNKNOWN_VERTEX";
        case Errc::EmptyLabelSet: return "EMPTY_LABEL_SET";
        case Errc::NonpositiveLabel: return "NONPOSITIVE_LABEL";
        case Errc::ModeUnsupported: return "MODE_UNSUPPORTED";
        case Errc::NotUndirected: return "NOT_UNDIRECTED";
        case Errc::NotDirected: return "NOT_DIRECTED";
        case Errc::NotConnected: return "NOT_CONNECTED";
        case Errc::SizeBoundExceeded: return "SIZE_BOUND_EXCEEDED";
        case Errc::EmbeddingNotInjective: return "EMBEDDING_NOT_INJECTIVE";
        case Errc::EmbeddingOutOfRange: return "EMBEDDING_OUT_OF_RANGE";
        case Errc::UnknownFixture: return "UNKNOWN_FIXTURE";
        case Errc::FixtureTooLarge: return "FIXTURE_TOO_LARGE";
        case Errc::ParseError: return "PARSE_ERROR";
    }
    return "UNKNOWN_ERROR";
}

bool TemporalGraph::has_vertex(const VertexId& v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::size_t TemporalGraph::temporal_edge_count() const {
    std::size_t n = 0;
    for (const auto& e : edges) n += e.labels.size();
    return n;
}

std::vector<Label> TemporalGraph::distinct_labels() const {
    std::vector<Label> out;
    for (const auto& e : edges) out.insert(out.end(), e.labels.begin(), e.labels.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool StaticGraph::has_arc(const VertexId& u, const VertexId& v) const {
    auto probe = directed ? std::make_pair(u, v) : canonical_pair(u, v);
    return std::binary_search(arcs.begin(), arcs.end(), probe);
}

std::pair<VertexId, VertexId> canonical_pair(const VertexId& a, const VertexId& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::string SettingClass::str() const {
    std::string out = direction == Direction::Directed ? "d" : "ud";
    out += '.';
    switch (flavor) {
        case Flavor::Strict: out += "strict"; break;
        case Flavor::NonStrict: out += "nonstrict"; break;
        case Flavor::Proper: out += "proper"; break;
    }
    out += '.';
    out += labeling == GraphLabeling::Simple ? "simple" : "multi";
    return out;
}

std::vector<SettingClass> all_settings() {
    std::vector<SettingClass> out;
    for (auto d : {Direction::Directed, Direction::Undirected})
        for (auto f : {Flavor::Strict, Flavor::NonStrict, Flavor::Proper})
            for (auto l : {GraphLabeling::Simple, GraphLabeling::Multi})
                out.push_back({d, f, l});
    return out;
}

SettingClass parse_setting(const std::string& text) {
    auto p1 = text.find('.');
    auto p2 = text.find('.', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw Error(Errc::ParseError, "setting must be <direction>.<flavor>.<labeling>, got '" + text + "'");
    std::string d = text.substr(0, p1), f = text.substr(p1 + 1, p2 - p1 - 1), l = text.substr(p2 + 1);
    SettingClass s{};
    if (d == "d" || d == "directed") s.direction = Direction::Directed;
    else if (d == "ud" || d == "undirected") s.direction = Direction::Undirected;
    else throw Error(Errc::ParseError, "unknown direction '" + d + "'");
    if (f == "strict") s.flavor = Flavor::Strict;
    else if (f == "nonstrict" || f == "non-strict") s.flavor = Flavor::NonStrict;
    else if (f == "proper") s.flavor = Flavor::Proper;
    else throw Error(Errc::ParseError, "unknown flavor '" + f + "'");
    if (l == "simple") s.labeling = GraphLabeling::Simple;
    else if (l == "multi") s.labeling = GraphLabeling::Multi;
    else throw Error(Errc::ParseError, "unknown labeling '" + l + "'");
    return s;
}

TemporalGraph validate_graph(const GraphDraft& draft) {
    TemporalGraph g;
    g.directed = draft.directed;
    g.vertices = draft.vertices;
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    for (const auto& v : g.vertices)
        if (v.empty()) throw Error(Errc::ParseError, "empty vertex identifier");

    std::map<std::pair<VertexId, VertexId>, std::vector<Label>> merged;
    for (const auto& e : draft.edges) {
        if (e.from == e.to)
            throw Error(Errc::SelfLoop, "edge at vertex '" + e.from + "'");
        if (!g.has_vertex(e.from))
            throw Error(Errc::UnknownVertex, "'" + e.from + "' in edge (" + e.from + "," + e.to + ")");
        if (!g.has_vertex(e.to))
            throw Error(Errc::UnknownVertex, "'" + e.to + "' in edge (" + e.from + "," + e.to + ")");
        if (e.labels.empty())
            throw Error(Errc::EmptyLabelSet, "edge (" + e.from + "," + e.to + ")");
        for (const auto& t : e.labels)
            if (!t.positive())
                throw Error(Errc::NonpositiveLabel,
                            "label " + t.str() + " on edge (" + e.from + "," + e.to + ")");
        auto key = g.directed ? std::make_pair(e.from, e.to) : canonical_pair(e.from, e.to);
        auto& ls = merged[key];
        ls.insert(ls.end(), e.labels.begin(), e.labels.end());
    }
    for (auto& [key, labels] : merged) {
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        g.edges.push_back({key.first, key.second, labels});
    }
    return g;
}

bool is_simple(const TemporalGraph& g) {
    for (const auto& e : g.edges)
        if (e.labels.size() != 1) return false;
    return true;
}

namespace {

bool labels_intersect(const std::vector<Label>& a, const std::vector<Label>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

bool has_label(const std::vector<Label>& ls, const Label& t) {
    return std::binary_search(ls.begin(), ls.end(), t);
}

} // namespace

bool is_proper(const TemporalGraph& g, Properness mode) {
    if (mode == Properness::Classic) {
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
                const auto& a = g.edges[i];
                const auto& b = g.edges[j];
                bool adjacent = a.tail == b.tail || a.tail == b.head ||
                                a.head == b.tail || a.head == b.head;
                if (adjacent && labels_intersect(a.labels, b.labels)) return false;
            }
        }
        return true;
    }
    if (!g.directed)
        throw Error(Errc::ModeUnsupported, "consecutive properness is defined for directed graphs");
    // For every temporal edge (u,v,t), reject a continuing edge (v,x,t);
    // the adopted reading excludes only the immediate back-edge x = u, the
    // literal reading rejects that one as well.
    for (const auto& e : g.edges) {
        for (const auto& f : g.edges) {
            if (f.tail != e.head) continue;
            if (mode == Properness::Consecutive && f.head == e.tail) continue;
            if (&e == &f) continue;
            if (labels_intersect(e.labels, f.labels)) return false;
        }
    }
    return true;
}

std::set<SettingClass> classify(const TemporalGraph& g) {
    Direction dir = g.directed ? Direction::Directed : Direction::Undirected;
    bool simple = is_simple(g);
    bool proper = g.directed ? is_proper(g, Properness::Consecutive)
                             : is_proper(g, Properness::Classic);

    std::vector<Flavor> flavors{Flavor::Strict, Flavor::NonStrict};
    if (proper) flavors.push_back(Flavor::Proper);
    std::vector<GraphLabeling> labelings{GraphLabeling::Multi};
    if (simple) labelings.push_back(GraphLabeling::Simple);

    std::set<SettingClass> out;
    for (auto f : flavors)
        for (auto l : labelings)
            out.insert({dir, f, l});
    return out;
}

TemporalGraph normalize_labels(const TemporalGraph& g) {
    std::vector<Label> all = g.distinct_labels();
    std::map<Label, Label> rank;
    std::int64_t r = 1;
    for (const auto& t : all) rank[t] = Rat(r++);
    TemporalGraph out = g;
    for (auto& e : out.edges)
        for (auto& t : e.labels) t = rank.at(t);
    return out;
}

StaticGraph snapshot(const TemporalGraph& g, const Label& t) {
    StaticGraph s;
    s.directed = g.directed;
    s.vertices = g.vertices;
    for (const auto& e : g.edges)
        if (has_label(e.labels, t)) s.arcs.emplace_back(e.tail, e.head);
    std::sort(s.arcs.begin(), s.arcs.end());
    return s;
}

StaticGraph footprint(const TemporalGraph& g) {
    StaticGraph s;
    s.directed = g.directed;
    s.vertices = g.vertices;
    for (const auto& e : g.edges) s.arcs.emplace_back(e.tail, e.head);
    std::sort(s.arcs.begin(), s.arcs.end());
    return s;
}

} // namespace tempograph
