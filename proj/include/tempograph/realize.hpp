#ifndef TEMPOGRAPH_REALIZE_HPP
#define TEMPOGRAPH_REALIZE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tempograph/core.hpp"
#include "tempograph/corpus.hpp"

namespace tempograph {

struct RealizeBounds {
    int max_labels_per_edge = 1;  // B
    int max_distinct_labels = 0;  // L; 0 derives the default (|F| simple, B*|F| multi)
    long long node_budget = 20'000'000; // per footprint shard

    static RealizeBounds from_env(); // honors TEMPOGRAPH_BUDGET
};

enum class RealizeKind {
    Realizable,
    UnrealizableExact,
    UnrealizableWithinBounds,
    BudgetExhausted,
};

const char* realize_kind_name(RealizeKind k);

struct RealizeResult {
    RealizeKind kind = RealizeKind::BudgetExhausted;
    std::optional<TemporalGraph> witness; // verified against the target when present
    long long explored_states = 0;
    long long footprints_tried = 0;
    std::string note;
};

// Decides whether `target` is the reachability graph of some temporal graph
// in `setting`, searching footprints over subsets of the target's arcs
// (every temporal edge induces its own reachability arc, so the restriction
// is lossless) and labelings up to order type. Simple settings are
// exhaustive; multi settings are exact only within (B, L).
RealizeResult realize(const StaticGraph& target, SettingClass setting, RealizeBounds bounds,
                      bool parallel = true);

// Support-notion analogue: is there a graph in `setting` whose set of path
// supports equals `target_supports`? The footprint is forced by the
// length-2 supports, so only labelings are searched.
RealizeResult realize_support(const std::set<std::vector<VertexId>>& target_supports,
                              const std::vector<VertexId>& vertices, SettingClass setting,
                              RealizeBounds bounds);

struct CycleRefutation {
    std::string labeling; // cycle arc labels, in cycle order
    std::string reason;   // offending transitive or missing arc
};

struct CycleReport {
    int n = 0;
    RealizeResult simple; // exact verdict for D & non-strict & simple
    RealizeResult multi;  // bounded verdict for D & non-strict & multi
    std::vector<CycleRefutation> samples;
};

// Exhaustively confirms that the directed cycle C_n is not the reachability
// graph of any D & non-strict graph (exact for the simple setting, within
// bounds for multi-labelings).
CycleReport check_no_induced_cycle(int n, RealizeBounds bounds);

struct CliqueSearch {
    int n = 0;
    int min_temporal_edges = -1; // -1 when nothing was found within the cap
    std::optional<TemporalGraph> witness;
    long long explored_states = 0;
    std::vector<std::pair<int, bool>> stages; // (temporal edge count, realizable)
};

// Minimum temporal-edge count of a Classic-proper directed graph on n
// vertices whose reachability graph is complete. Exhaustive over
// footprints and order-typed labelings with a fixed total edge count.
CliqueSearch min_edges_for_clique(int n, RealizeBounds bounds);

struct SeparationReport {
    std::string fixture;
    std::string setting;
    std::string status; // realize kind, or SKIPPED_EXHAUSTIVE for crab/alien
    std::optional<RealizeResult> result;
    std::vector<PropertyCheck> checks;
    long long elapsed_ms = 0;

    bool verified() const;
};

// Re-verifies a corpus fixture's separation claim: runs the bounded search
// against the claimed-unrealizable setting, or the fixture's structural
// property checks where exhaustive search is out of reach.
SeparationReport verify_separation(const std::string& fixture_name,
                                   const std::string& fixture_root);

} // namespace tempograph

#endif
