#ifndef TEMPOGRAPH_EQUIVALENCE_HPP
#define TEMPOGRAPH_EQUIVALENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tempograph/core.hpp"
#include "tempograph/reachability.hpp"
#include "tempograph/transforms.hpp"

namespace tempograph {

struct Counterexample {
    enum class Kind { Support, Arc, Structural };
    Kind kind = Kind::Structural;
    std::vector<VertexId> support;           // Kind::Support
    std::pair<VertexId, VertexId> arc;       // Kind::Arc
    std::string note;
};

struct Verdict {
    bool equivalent = false;
    std::optional<std::map<VertexId, VertexId>> witness; // populated iff equivalent
    std::optional<Counterexample> counterexample;        // populated iff not
};

enum class EquivMode { Identity, Isomorphism };

// Arc-preserving bijection between two static digraphs, or nullopt.
// Backtracking search, guarded by a vertex bound.
std::optional<std::map<VertexId, VertexId>> digraph_isomorphic(const StaticGraph& a,
                                                               const StaticGraph& b,
                                                               std::size_t max_vertices = 12);

// Identity mode compares vertex and arc sets of the two reachability
// graphs directly; Isomorphism mode searches for a bijection.
Verdict reachability_equivalent(const TemporalGraph& g1, const TemporalGraph& g2, Semantics s1,
                                Semantics s2, EquivMode mode = EquivMode::Identity);

// Equal path-support sets, same vertex set required.
Verdict support_equivalent(const TemporalGraph& g1, const TemporalGraph& g2, Semantics s1,
                           Semantics s2, std::size_t max_vertices = 10);

// (u,v) in R(small) iff (emb(u),emb(v)) in R(big), for all ordered pairs.
Verdict induced_reachability_equivalent(const TemporalGraph& small, const TemporalGraph& big,
                                        Semantics s_small, Semantics s_big, const Embedding& emb);

} // namespace tempograph

#endif
