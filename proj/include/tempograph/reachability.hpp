#ifndef TEMPOGRAPH_REACHABILITY_HPP
#define TEMPOGRAPH_REACHABILITY_HPP

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "tempograph/core.hpp"

namespace tempograph {

// Strict: labels along a path strictly increase. NonStrict: non-decreasing,
// with arbitrary chaining inside one timestamp (per-snapshot closure).
enum class Semantics { Strict, NonStrict };

Semantics semantics_of(Flavor f); // Proper collapses to Strict

const char* semantics_name(Semantics s);
Semantics parse_semantics(const std::string& text);

struct Arrival {
    enum class Kind { Source, At, Unreached };
    Kind kind = Kind::Unreached;
    Label at{}; // valid when kind == At

    bool reached() const { return kind != Kind::Unreached; }
};

struct ArrivalMap {
    VertexId source;
    std::map<VertexId, Arrival> arrivals;

    bool reached(const VertexId& v) const { return arrivals.at(v).reached(); }
};

ArrivalMap earliest_arrival(const TemporalGraph& g, const VertexId& source, Semantics s);

// Static digraph with arc (u,v) iff u != v and some temporal path u~>v
// exists. The parallel variant computes per-source arrivals concurrently
// (OpenMP); results are identical to the serial reference by construction.
StaticGraph reachability_graph(const TemporalGraph& g, Semantics s);
StaticGraph reachability_graph_serial(const TemporalGraph& g, Semantics s);

bool is_temporally_connected(const TemporalGraph& g, Semantics s);

// All vertex sequences (length >= 2, vertex-simple) that are the support of
// at least one temporal path. Exponential enumeration, guarded by a vertex
// bound.
std::set<std::vector<VertexId>> enumerate_path_supports(const TemporalGraph& g, Semantics s,
                                                        std::size_t max_vertices = 10);

} // namespace tempograph

#endif
