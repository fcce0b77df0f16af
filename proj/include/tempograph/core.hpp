#ifndef TEMPOGRAPH_CORE_HPP
#define TEMPOGRAPH_CORE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tempograph/errors.hpp"
#include "tempograph/rational.hpp"

namespace tempograph {

using VertexId = std::string;
using Label = Rat;

// One footprint edge with its (sorted, duplicate-free) set of time labels.
// For undirected graphs the record is stored in canonical orientation
// (tail < head) and interpreted symmetrically.
struct TemporalEdge {
    VertexId tail;
    VertexId head;
    std::vector<Label> labels;

    bool operator==(const TemporalEdge&) const = default;
};

struct TemporalGraph {
    bool directed = true;
    std::vector<VertexId> vertices;  // sorted, unique
    std::vector<TemporalEdge> edges; // sorted by (tail, head), unique per pair

    bool operator==(const TemporalGraph&) const = default;

    bool has_vertex(const VertexId& v) const;
    std::size_t temporal_edge_count() const; // sum of label-set sizes
    std::vector<Label> distinct_labels() const;
    std::size_t lifetime() const { return distinct_labels().size(); }
};

struct StaticGraph {
    bool directed = true;
    std::vector<VertexId> vertices;                     // sorted, unique
    std::vector<std::pair<VertexId, VertexId>> arcs;    // sorted; canonical pairs if undirected

    bool operator==(const StaticGraph&) const = default;

    bool has_arc(const VertexId& u, const VertexId& v) const;
};

enum class Direction { Directed, Undirected };
enum class Flavor { Strict, NonStrict, Proper };
enum class GraphLabeling { Simple, Multi };

// One of the 12 setting classes: direction x {strict, non-strict, proper} x
// {simple, multi}. Proper carries no strict/non-strict distinction.
struct SettingClass {
    Direction direction;
    Flavor flavor;
    GraphLabeling labeling;

    auto operator<=>(const SettingClass&) const = default;

    std::string str() const;
};

std::vector<SettingClass> all_settings();
SettingClass parse_setting(const std::string& text); // "<direction>.<flavor>.<labeling>"

// Properness checks. Classic forbids any two edges sharing a vertex from
// sharing a label. Consecutive (directed only) forbids, for each temporal
// edge (u,v,t), a continuing edge (v,x,t) with x != u; ConsecutiveLiteral
// is the stricter reading that also forbids the back-edge (v,u,t).
enum class Properness { Classic, Consecutive, ConsecutiveLiteral };

// Unvalidated input as parsed from external sources.
struct GraphDraft {
    bool directed = true;
    std::vector<VertexId> vertices;
    struct Edge {
        VertexId from;
        VertexId to;
        std::vector<Label> labels;
    };
    std::vector<Edge> edges;
};

// Checks all model invariants and normalizes representation (sorted vertex
// set, canonical edge orientation for undirected graphs, duplicate edge
// records merged by uniting label sets). Throws Error on violation.
TemporalGraph validate_graph(const GraphDraft& draft);

bool is_simple(const TemporalGraph& g);
bool is_proper(const TemporalGraph& g, Properness mode);

// Structural membership: every setting class whose constraints g satisfies.
// Strict/non-strict are semantics parameters, so any graph meets both; a
// proper graph (Classic for undirected, Consecutive for directed) is
// additionally reported under the Proper flavor.
std::set<SettingClass> classify(const TemporalGraph& g);

// Rank-maps all labels to consecutive integers 1..m. Order and equalities
// are preserved, hence reachability under both semantics is unchanged.
TemporalGraph normalize_labels(const TemporalGraph& g);

StaticGraph snapshot(const TemporalGraph& g, const Label& t);
StaticGraph footprint(const TemporalGraph& g);

// Canonical unordered pair for undirected storage.
std::pair<VertexId, VertexId> canonical_pair(const VertexId& a, const VertexId& b);

} // namespace tempograph

#endif
