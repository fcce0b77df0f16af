#include "tempograph/reachability.hpp"

#include <algorithm>
#include <climits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tempograph {

Semantics semantics_of(Flavor f) {
    return f == Flavor::NonStrict ? Semantics::NonStrict : Semantics::Strict;
}

const char* semantics_name(Semantics s) {
    return s == Semantics::Strict ? "strict" : "nonstrict";
}

Semantics parse_semantics(const std::string& text) {
    if (text == "strict") return Semantics::Strict;
    if (text == "nonstrict" || text == "non-strict") return Semantics::NonStrict;
    throw Error(Errc::ParseError, "unknown semantics '" + text + "'");
}

namespace {

// Index-based view: arcs grouped by label rank, ascending. Undirected edges
// appear in both orientations.
struct IndexedGraph {
    int n = 0;
    std::vector<Label> labels; // distinct, ascending
    std::vector<std::vector<std::pair<int, int>>> arcs_by_label;

    explicit IndexedGraph(const TemporalGraph& g) {
        n = static_cast<int>(g.vertices.size());
        labels = g.distinct_labels();
        arcs_by_label.resize(labels.size());
        auto rank = [&](const Label& t) {
            return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), t) - labels.begin());
        };
        auto vid = [&](const VertexId& v) {
            return static_cast<int>(std::lower_bound(g.vertices.begin(), g.vertices.end(), v) -
                                    g.vertices.begin());
        };
        for (const auto& e : g.edges) {
            int u = vid(e.tail), v = vid(e.head);
            for (const auto& t : e.labels) {
                int k = rank(t);
                arcs_by_label[k].emplace_back(u, v);
                if (!g.directed) arcs_by_label[k].emplace_back(v, u);
            }
        }
    }
};

constexpr int kUnreached = INT_MAX;
constexpr int kSourceSentinel = -1;

// arrival[v] = rank of the earliest arrival label, kSourceSentinel at the
// source, kUnreached otherwise.
std::vector<int> arrival_ranks(const IndexedGraph& ig, int source, Semantics s) {
    std::vector<int> arrival(ig.n, kUnreached);
    arrival[source] = kSourceSentinel;
    for (int k = 0; k < static_cast<int>(ig.arcs_by_label.size()); ++k) {
        const auto& arcs = ig.arcs_by_label[k];
        if (s == Semantics::Strict) {
            // a label-k arc extends only paths that arrived strictly earlier,
            // so one pass per group suffices
            std::vector<int> updates;
            for (const auto& [u, v] : arcs)
                if (arrival[u] < k && arrival[v] > k) updates.push_back(v);
            for (int v : updates) arrival[v] = k;
        } else {
            // within-timestamp closure: relax equal-label arcs to fixpoint
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& [u, v] : arcs) {
                    if (arrival[u] <= k && arrival[v] > k) {
                        arrival[v] = k;
                        changed = true;
                    }
                }
            }
        }
    }
    return arrival;
}

} // namespace

ArrivalMap earliest_arrival(const TemporalGraph& g, const VertexId& source, Semantics s) {
    if (!g.has_vertex(source))
        throw Error(Errc::UnknownVertex, "'" + source + "'");
    IndexedGraph ig(g);
    int src = static_cast<int>(std::lower_bound(g.vertices.begin(), g.vertices.end(), source) -
                               g.vertices.begin());
    std::vector<int> ranks = arrival_ranks(ig, src, s);
    ArrivalMap out;
    out.source = source;
    for (int v = 0; v < ig.n; ++v) {
        Arrival a;
        if (ranks[v] == kSourceSentinel) a.kind = Arrival::Kind::Source;
        else if (ranks[v] == kUnreached) a.kind = Arrival::Kind::Unreached;
        else { a.kind = Arrival::Kind::At; a.at = ig.labels[ranks[v]]; }
        out.arrivals.emplace(g.vertices[v], a);
    }
    return out;
}

StaticGraph reachability_graph_serial(const TemporalGraph& g, Semantics s) {
    StaticGraph r;
    r.directed = true;
    r.vertices = g.vertices;
    for (const auto& u : g.vertices) {
        ArrivalMap am = earliest_arrival(g, u, s);
        for (const auto& [v, a] : am.arrivals)
            if (v != u && a.reached()) r.arcs.emplace_back(u, v);
    }
    std::sort(r.arcs.begin(), r.arcs.end());
    return r;
}

StaticGraph reachability_graph(const TemporalGraph& g, Semantics s) {
    const int n = static_cast<int>(g.vertices.size());
    IndexedGraph ig(g);
    std::vector<std::vector<int>> reached(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int u = 0; u < n; ++u) {
        std::vector<int> ranks = arrival_ranks(ig, u, s);
        for (int v = 0; v < n; ++v)
            if (v != u && ranks[v] != kUnreached) reached[u].push_back(v);
    }
    StaticGraph r;
    r.directed = true;
    r.vertices = g.vertices;
    for (int u = 0; u < n; ++u)
        for (int v : reached[u]) r.arcs.emplace_back(g.vertices[u], g.vertices[v]);
    std::sort(r.arcs.begin(), r.arcs.end());
    return r;
}

bool is_temporally_connected(const TemporalGraph& g, Semantics s) {
    std::size_t n = g.vertices.size();
    return reachability_graph(g, s).arcs.size() == n * (n - (n ? 1 : 0));
}

std::set<std::vector<VertexId>> enumerate_path_supports(const TemporalGraph& g, Semantics s,
                                                        std::size_t max_vertices) {
    if (g.vertices.size() > max_vertices)
        throw Error(Errc::SizeBoundExceeded,
                    "support enumeration bound is " + std::to_string(max_vertices) + " vertices, graph has " +
                        std::to_string(g.vertices.size()));
    int n = static_cast<int>(g.vertices.size());
    IndexedGraph ig(g);
    // per-vertex out arcs as (head, label rank)
    std::vector<std::vector<std::pair<int, int>>> out(n);
    for (int k = 0; k < static_cast<int>(ig.arcs_by_label.size()); ++k)
        for (const auto& [u, v] : ig.arcs_by_label[k]) out[u].emplace_back(v, k);

    std::set<std::vector<VertexId>> supports;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v, int last_rank, unsigned visited) -> void {
        for (const auto& [w, k] : out[v]) {
            if (visited & (1u << w)) continue;
            bool ok = last_rank == kSourceSentinel ||
                      (s == Semantics::Strict ? k > last_rank : k >= last_rank);
            if (!ok) continue;
            path.push_back(w);
            std::vector<VertexId> names;
            names.reserve(path.size());
            for (int p : path) names.push_back(g.vertices[p]);
            supports.insert(std::move(names));
            self(self, w, k, visited | (1u << w));
            path.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        path.assign(1, v);
        dfs(dfs, v, kSourceSentinel, 1u << v);
    }
    return supports;
}

} // namespace tempograph
