#ifndef TEMPOGRAPH_TRANSFORMS_HPP
#define TEMPOGRAPH_TRANSFORMS_HPP

#include <map>
#include <string>
#include <vector>

#include "tempograph/core.hpp"
#include "tempograph/reachability.hpp"

namespace tempograph {

struct Embedding {
    std::map<VertexId, VertexId> map; // injective, total on the source vertex set

    static Embedding identity(const std::vector<VertexId>& vs);
};

struct TransformReport {
    std::string method;
    std::size_t input_edges = 0;  // temporal edge counts
    std::size_t output_edges = 0;
    std::size_t input_lifetime = 0; // distinct label counts
    std::size_t output_lifetime = 0;
    bool proper = false; // Classic properness of the output
    bool simple = false;
};

struct TransformOutput {
    TemporalGraph graph;
    Embedding embedding; // identity except where the transform adds vertices
    TransformReport report;
};

// Each undirected edge {u,v} becomes the two opposing arcs. With tilt set,
// the canonical arc gets t-eps and the reverse t+eps per label t (eps below
// half the minimum label gap), which keeps a Classic-proper input proper.
TransformOutput undirected_to_directed(const TemporalGraph& g, bool tilt);

// Per-snapshot relabeling that makes the graph Classic-proper while
// preserving path supports: non-strict paths of the input correspond to
// strict paths of the output with the same support, and conversely. Uses
// the SCC condensation of each snapshot; intra-component edges receive
// tilted label blocks, inter-component arcs distinct labels in the gaps.
TransformOutput support_dilation(const TemporalGraph& g);

// Reachability-preserving variant: each snapshot SCC (or undirected
// connected component) is replaced by a bidirected spanning tree labeled
// leaves-up then root-down. Output is directed and Classic-proper, its
// strict reachability graph equals the input's non-strict one, and the
// temporal edge count at most doubles.
TransformOutput reachability_dilation(const TemporalGraph& g);

// Bidirected spanning tree over a connected component, one fresh label per
// arc, all labels above base. Leaf-to-root labels precede root-to-leaf
// labels, so the root is a pivot and the tree is temporally connected.
std::vector<TemporalEdge> spanning_tree_labeling(const StaticGraph& component, const Label& base);

// Footprint := reachability graph, every arc labeled {1}. Output is
// directed & strict & simple with the same reachability graph.
TransformOutput saturate(const TemporalGraph& g, Semantics s);

// Subdivides every directed temporal edge (u,v,t) through a fresh vertex
// with labels t -/+ c(e)*eps (c = footprint edge color). Output is simple
// and Classic-proper; strict reachability induced on the original vertices
// is unchanged.
TransformOutput semaphore(const TemporalGraph& g);

// Composition into the directed & proper & simple setting: doubling if the
// input is undirected, reachability-dilation if the source flavor is
// non-strict, then semaphore. Induced reachability on the original
// vertices equals the input's under the source setting's semantics.
TransformOutput to_happy(const TemporalGraph& g, SettingClass source);

} // namespace tempograph

#endif
