#include "tempograph/condense.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tempograph {

int Condensation::component_of(const VertexId& v) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), v,
                               [](const auto& p, const VertexId& x) { return p.first < x; });
    if (it == index_.end() || it->first != v)
        throw Error(Errc::UnknownVertex, "'" + v + "' not in condensation");
    return it->second;
}

Condensation scc_condensation(const StaticGraph& s) {
    if (!s.directed) throw Error(Errc::NotDirected, "condensation expects a directed graph");
    const int n = static_cast<int>(s.vertices.size());
    auto vid = [&](const VertexId& v) {
        return static_cast<int>(std::lower_bound(s.vertices.begin(), s.vertices.end(), v) -
                                s.vertices.begin());
    };
    std::vector<std::vector<int>> out(n);
    for (const auto& [u, v] : s.arcs) out[vid(u)].push_back(vid(v));

    // Tarjan, iterative
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int counter = 0, ncomp = 0;
    std::vector<std::vector<int>> comp_members;
    struct Frame { int v; std::size_t next; };
    for (int root = 0; root < n; ++root) {
        if (idx[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next < out[v].size()) {
                int w = out[v][next++];
                if (idx[w] == -1) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
            } else {
                if (low[v] == idx[v]) {
                    std::vector<int> members;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        members.push_back(w);
                    } while (w != v);
                    comp_members.push_back(std::move(members));
                    ++ncomp;
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
            }
        }
    }

    Condensation c;
    c.components.resize(ncomp);
    for (int i = 0; i < ncomp; ++i) {
        for (int w : comp_members[i]) c.components[i].push_back(s.vertices[w]);
        std::sort(c.components[i].begin(), c.components[i].end());
    }
    std::set<std::pair<int, int>> dag;
    for (const auto& [u, v] : s.arcs) {
        int cu = comp[vid(u)], cv = comp[vid(v)];
        if (cu != cv) dag.insert({cu, cv});
    }
    c.dag_arcs.assign(dag.begin(), dag.end());

    // Kahn with lexicographic tie-break on the smallest member vertex
    std::vector<int> indeg(ncomp, 0);
    std::vector<std::vector<int>> dag_out(ncomp);
    for (const auto& [a, b] : c.dag_arcs) {
        ++indeg[b];
        dag_out[a].push_back(b);
    }
    auto cmp = [&](int a, int b) { return c.components[a].front() < c.components[b].front(); };
    std::vector<int> ready;
    for (int i = 0; i < ncomp; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        auto it = std::min_element(ready.begin(), ready.end(), cmp);
        int v = *it;
        ready.erase(it);
        c.order.push_back(v);
        for (int w : dag_out[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }

    for (int i = 0; i < ncomp; ++i)
        for (const auto& v : c.components[i]) c.index_.emplace_back(v, i);
    std::sort(c.index_.begin(), c.index_.end());
    return c;
}

std::vector<std::vector<VertexId>> weakly_connected_components(const StaticGraph& s) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& v : s.vertices) adj[v];
    for (const auto& [u, v] : s.arcs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<VertexId> seen;
    std::vector<std::vector<VertexId>> out;
    for (const auto& v : s.vertices) {
        if (seen.count(v)) continue;
        std::vector<VertexId> comp, todo{v};
        seen.insert(v);
        while (!todo.empty()) {
            VertexId w = todo.back();
            todo.pop_back();
            comp.push_back(w);
            for (const auto& x : adj[w])
                if (seen.insert(x).second) todo.push_back(x);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace tempograph
