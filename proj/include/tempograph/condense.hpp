#ifndef TEMPOGRAPH_CONDENSE_HPP
#define TEMPOGRAPH_CONDENSE_HPP

#include <vector>

#include "tempograph/core.hpp"

namespace tempograph {

// SCC condensation of a directed static graph, with a deterministic linear
// extension of the DAG (Kahn's algorithm; among ready components the one
// with the lexicographically smallest contained vertex goes first).
struct Condensation {
    std::vector<std::vector<VertexId>> components; // each sorted
    std::vector<std::pair<int, int>> dag_arcs;     // component indices, deduplicated
    std::vector<int> order;                        // topological order of component indices

    int component_of(const VertexId& v) const;

private:
    friend Condensation scc_condensation(const StaticGraph&);
    std::vector<std::pair<VertexId, int>> index_; // sorted lookup
};

Condensation scc_condensation(const StaticGraph& s);

// Connected components of the underlying undirected graph, each sorted,
// listed by smallest contained vertex.
std::vector<std::vector<VertexId>> weakly_connected_components(const StaticGraph& s);

} // namespace tempograph

#endif
