#include "tempograph/transforms.hpp"

#include <algorithm>
#include <set>

#include "tempograph/coloring.hpp"
#include "tempograph/condense.hpp"

namespace tempograph {

Embedding Embedding::identity(const std::vector<VertexId>& vs) {
    Embedding e;
    for (const auto& v : vs) e.map[v] = v;
    return e;
}

namespace {

using LabelBag = std::map<std::pair<VertexId, VertexId>, std::vector<Label>>;

TemporalGraph assemble(bool directed, std::vector<VertexId> vertices, const LabelBag& bag) {
    TemporalGraph out;
    out.directed = directed;
    out.vertices = std::move(vertices);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    for (const auto& [arc, labels] : bag) {
        TemporalEdge e{arc.first, arc.second, labels};
        std::sort(e.labels.begin(), e.labels.end());
        e.labels.erase(std::unique(e.labels.begin(), e.labels.end()), e.labels.end());
        out.edges.push_back(std::move(e));
    }
    return out;
}

TransformReport make_report(const std::string& method, const TemporalGraph& in,
                            const TemporalGraph& out) {
    TransformReport r;
    r.method = method;
    r.input_edges = in.temporal_edge_count();
    r.output_edges = out.temporal_edge_count();
    r.input_lifetime = in.lifetime();
    r.output_lifetime = out.lifetime();
    r.proper = is_proper(out, Properness::Classic);
    r.simple = is_simple(out);
    return r;
}

StaticGraph subgraph(const StaticGraph& s, const std::vector<VertexId>& vertices) {
    StaticGraph out;
    out.directed = s.directed;
    out.vertices = vertices;
    std::sort(out.vertices.begin(), out.vertices.end());
    std::set<VertexId> in(out.vertices.begin(), out.vertices.end());
    for (const auto& [u, v] : s.arcs)
        if (in.count(u) && in.count(v)) out.arcs.emplace_back(u, v);
    std::sort(out.arcs.begin(), out.arcs.end());
    return out;
}

// Shared skeleton of both dilations. Snapshots are processed in ascending
// label order; each consumes a band of fresh labels above `base` and the
// widths of vertex-disjoint components overlap within the band. For each
// SCC in topological order, arcs entering it get distinct integer labels in
// the gap before its block; the block itself is filled by `fill_intra`,
// which returns the integer width it consumed.
template <typename FillIntra>
TemporalGraph dilate_directed(const TemporalGraph& g, FillIntra&& fill_intra) {
    LabelBag bag;
    Rat base(0);
    for (const auto& t : g.distinct_labels()) {
        StaticGraph snap = snapshot(g, t);
        std::int64_t band_width = 0;
        for (const auto& wcc : weakly_connected_components(snap)) {
            StaticGraph w = subgraph(snap, wcc);
            if (w.arcs.empty()) continue;
            Condensation cond = scc_condensation(w);
            std::int64_t pos = 0;
            for (int ci : cond.order) {
                const auto& members = cond.components[ci];
                // gap arcs: original arcs entering this component
                for (const auto& [u, v] : w.arcs) {
                    if (cond.component_of(v) == ci && cond.component_of(u) != ci)
                        bag[{u, v}].push_back(base + Rat(++pos));
                }
                if (members.size() >= 2) {
                    StaticGraph intra = subgraph(w, members);
                    pos += fill_intra(intra, base + Rat(pos), bag);
                }
            }
            band_width = std::max(band_width, pos);
        }
        base = base + Rat(band_width);
    }
    return assemble(true, g.vertices, bag);
}

} // namespace

TransformOutput undirected_to_directed(const TemporalGraph& g, bool tilt) {
    if (g.directed) throw Error(Errc::NotUndirected, "doubling expects an undirected graph");
    Rat eps(0);
    if (tilt) {
        std::vector<Label> all = g.distinct_labels();
        Rat span = all.empty() ? Rat(1) : all.front(); // keep labels positive
        for (std::size_t i = 1; i < all.size(); ++i)
            span = std::min(span, all[i] - all[i - 1]);
        eps = span / Rat(4);
    }
    LabelBag bag;
    for (const auto& e : g.edges) {
        for (const auto& t : e.labels) {
            bag[{e.tail, e.head}].push_back(t - eps);
            bag[{e.head, e.tail}].push_back(t + eps);
        }
    }
    TransformOutput out;
    out.graph = assemble(true, g.vertices, bag);
    out.embedding = Embedding::identity(g.vertices);
    out.report = make_report(tilt ? "doubling+tilt" : "doubling", g, out.graph);
    return out;
}

TransformOutput support_dilation(const TemporalGraph& g) {
    if (!g.directed) throw Error(Errc::NotDirected, "support-dilation expects a directed graph");
    auto fill = [](const StaticGraph& intra, const Rat& block_base, LabelBag& bag) -> std::int64_t {
        // every intra edge carries the whole block {1..k}, tilted per color;
        // k = |S|-1 bounds the longest simple path inside the component
        std::int64_t k = static_cast<std::int64_t>(intra.vertices.size()) - 1;
        ColorMap cm = greedy_edge_coloring(intra);
        Rat eps = tilt_epsilon(cm.max_color);
        for (const auto& arc : intra.arcs) {
            Rat shift = Rat(cm.at(arc.first, arc.second)) * eps;
            for (std::int64_t j = 1; j <= k; ++j)
                bag[arc].push_back(block_base + Rat(j) + shift);
        }
        return k;
    };
    TransformOutput out;
    out.graph = dilate_directed(g, fill);
    out.embedding = Embedding::identity(g.vertices);
    out.report = make_report("support-dilation", g, out.graph);
    return out;
}

std::vector<TemporalEdge> spanning_tree_labeling(const StaticGraph& component, const Label& base) {
    const auto& vs = component.vertices;
    if (vs.empty()) return {};
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& v : vs) adj[v];
    for (const auto& [u, v] : component.arcs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, nbrs] : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    // BFS tree rooted at the smallest vertex
    VertexId root = *std::min_element(vs.begin(), vs.end());
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, int> depth;
    depth[root] = 0;
    std::vector<VertexId> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId v = queue[i];
        for (const auto& w : adj[v]) {
            if (depth.count(w)) continue;
            parent[w] = v;
            depth[w] = depth[v] + 1;
            queue.push_back(w);
        }
    }
    if (queue.size() != vs.size())
        throw Error(Errc::NotConnected, "spanning tree labeling needs a connected component");

    std::vector<VertexId> non_root;
    for (const auto& v : vs)
        if (v != root) non_root.push_back(v);

    std::vector<TemporalEdge> out;
    Rat next = base;
    // upwards: deepest arcs first, so labels increase towards the root
    std::sort(non_root.begin(), non_root.end(), [&](const VertexId& a, const VertexId& b) {
        if (depth[a] != depth[b]) return depth[a] > depth[b];
        return a < b;
    });
    for (const auto& v : non_root) {
        next = next + Rat(1);
        out.push_back({v, parent[v], {next}});
    }
    // downwards: shallowest arcs first, labels keep increasing
    std::sort(non_root.begin(), non_root.end(), [&](const VertexId& a, const VertexId& b) {
        if (depth[a] != depth[b]) return depth[a] < depth[b];
        return a < b;
    });
    for (const auto& v : non_root) {
        next = next + Rat(1);
        out.push_back({parent[v], v, {next}});
    }
    return out;
}

TransformOutput reachability_dilation(const TemporalGraph& g) {
    TransformOutput out;
    if (g.directed) {
        auto fill = [](const StaticGraph& intra, const Rat& block_base, LabelBag& bag) -> std::int64_t {
            for (const auto& e : spanning_tree_labeling(intra, block_base))
                bag[{e.tail, e.head}].push_back(e.labels.front());
            return 2 * (static_cast<std::int64_t>(intra.vertices.size()) - 1);
        };
        out.graph = dilate_directed(g, fill);
    } else {
        // undirected: every snapshot component becomes a bidirected tree
        LabelBag bag;
        Rat base(0);
        for (const auto& t : g.distinct_labels()) {
            StaticGraph snap = snapshot(g, t);
            std::int64_t band_width = 0;
            for (const auto& cc : weakly_connected_components(snap)) {
                if (cc.size() < 2) continue;
                StaticGraph comp = subgraph(snap, cc);
                for (const auto& e : spanning_tree_labeling(comp, base))
                    bag[{e.tail, e.head}].push_back(e.labels.front());
                band_width = std::max(band_width, 2 * (static_cast<std::int64_t>(cc.size()) - 1));
            }
            base = base + Rat(band_width);
        }
        out.graph = assemble(true, g.vertices, bag);
    }
    out.embedding = Embedding::identity(g.vertices);
    out.report = make_report("reachability-dilation", g, out.graph);
    return out;
}

TransformOutput saturate(const TemporalGraph& g, Semantics s) {
    if (!g.directed) throw Error(Errc::NotDirected, "saturation expects a directed graph");
    StaticGraph r = reachability_graph(g, s);
    LabelBag bag;
    for (const auto& arc : r.arcs) bag[arc].push_back(Rat(1));
    TransformOutput out;
    out.graph = assemble(true, g.vertices, bag);
    out.embedding = Embedding::identity(g.vertices);
    out.report = make_report("saturation", g, out.graph);
    return out;
}

namespace {

VertexId fresh_aux_name(const VertexId& u, const VertexId& v, const Label& t,
                        const std::set<VertexId>& taken) {
    VertexId name = u + ">" + v + "@" + t.str();
    while (taken.count(name)) name += "'";
    return name;
}

} // namespace

TransformOutput semaphore(const TemporalGraph& g) {
    if (!g.directed) throw Error(Errc::NotDirected, "semaphore expects a directed graph");
    // integer labels guarantee unit gaps, so tilts below 1/2 cannot cross
    TemporalGraph base = normalize_labels(g);
    ColorMap cm = greedy_edge_coloring(footprint(base));
    Rat eps = tilt_epsilon(cm.max_color);

    std::set<VertexId> taken(base.vertices.begin(), base.vertices.end());
    std::vector<VertexId> vertices = base.vertices;
    LabelBag bag;
    for (const auto& e : base.edges) {
        Rat shift = Rat(cm.at(e.tail, e.head)) * eps;
        for (const auto& t : e.labels) {
            VertexId w = fresh_aux_name(e.tail, e.head, t, taken);
            taken.insert(w);
            vertices.push_back(w);
            bag[{e.tail, w}].push_back(t - shift);
            bag[{w, e.head}].push_back(t + shift);
        }
    }
    TransformOutput out;
    out.graph = assemble(true, std::move(vertices), bag);
    out.embedding = Embedding::identity(g.vertices);
    out.report = make_report("semaphore", g, out.graph);
    return out;
}

TransformOutput to_happy(const TemporalGraph& g, SettingClass source) {
    TemporalGraph cur = g;
    if (!cur.directed) cur = undirected_to_directed(cur, false).graph;
    if (source.flavor == Flavor::NonStrict) cur = reachability_dilation(cur).graph;
    TransformOutput out = semaphore(cur);
    out.embedding = Embedding::identity(g.vertices);
    out.report = make_report("to-happy", g, out.graph);
    return out;
}

} // namespace tempograph
