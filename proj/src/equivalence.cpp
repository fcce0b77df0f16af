#include "tempograph/equivalence.hpp"

#include <algorithm>
#include <set>

namespace tempograph {

namespace {

struct AdjBits {
    int n = 0;
    std::vector<unsigned> out, in;

    explicit AdjBits(const StaticGraph& s) {
        n = static_cast<int>(s.vertices.size());
        out.assign(n, 0);
        in.assign(n, 0);
        auto vid = [&](const VertexId& v) {
            return static_cast<int>(std::lower_bound(s.vertices.begin(), s.vertices.end(), v) -
                                    s.vertices.begin());
        };
        for (const auto& [u, v] : s.arcs) {
            out[vid(u)] |= 1u << vid(v);
            in[vid(v)] |= 1u << vid(u);
        }
    }
};

} // namespace

std::optional<std::map<VertexId, VertexId>> digraph_isomorphic(const StaticGraph& a,
                                                               const StaticGraph& b,
                                                               std::size_t max_vertices) {
    if (a.vertices.size() > max_vertices || b.vertices.size() > max_vertices)
        throw Error(Errc::SizeBoundExceeded,
                    "isomorphism search bound is " + std::to_string(max_vertices) + " vertices");
    if (a.vertices.size() != b.vertices.size() || a.arcs.size() != b.arcs.size())
        return std::nullopt;

    AdjBits A(a), B(b);
    const int n = A.n;
    auto degree_pair = [](const AdjBits& g, int v) {
        return std::make_pair(__builtin_popcount(g.out[v]), __builtin_popcount(g.in[v]));
    };
    // degree multisets must match
    {
        std::vector<std::pair<int, int>> da, db;
        for (int v = 0; v < n; ++v) {
            da.push_back(degree_pair(A, v));
            db.push_back(degree_pair(B, v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return std::nullopt;
    }

    std::vector<int> image(n, -1);
    unsigned used = 0;
    auto consistent = [&](int v, int w) {
        if (degree_pair(A, v) != degree_pair(B, w)) return false;
        for (int u = 0; u < n; ++u) {
            if (image[u] < 0) continue;
            bool a_uv = A.out[u] & (1u << v), b_uw = B.out[image[u]] & (1u << w);
            if (a_uv != b_uw) return false;
            bool a_vu = A.out[v] & (1u << u), b_wu = B.out[w] & (1u << image[u]);
            if (a_vu != b_wu) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used & (1u << w)) continue;
            if (!consistent(v, w)) continue;
            image[v] = w;
            used |= 1u << w;
            if (self(self, v + 1)) return true;
            image[v] = -1;
            used &= ~(1u << w);
        }
        return false;
    };
    if (n > 0 && !search(search, 0)) return std::nullopt;

    std::map<VertexId, VertexId> out;
    for (int v = 0; v < n; ++v) out[a.vertices[v]] = b.vertices[image[v] < 0 ? v : image[v]];
    return out;
}

Verdict reachability_equivalent(const TemporalGraph& g1, const TemporalGraph& g2, Semantics s1,
                                Semantics s2, EquivMode mode) {
    StaticGraph r1 = reachability_graph(g1, s1);
    StaticGraph r2 = reachability_graph(g2, s2);
    Verdict v;
    if (mode == EquivMode::Identity) {
        if (r1.vertices != r2.vertices) {
            v.equivalent = false;
            Counterexample c;
            c.kind = Counterexample::Kind::Structural;
            c.note = "vertex sets differ";
            v.counterexample = c;
            return v;
        }
        if (r1.arcs == r2.arcs) {
            v.equivalent = true;
            std::map<VertexId, VertexId> id;
            for (const auto& x : r1.vertices) id[x] = x;
            v.witness = std::move(id);
            return v;
        }
        // lexicographically smallest arc present in exactly one side
        std::vector<std::pair<VertexId, VertexId>> diff;
        std::set_symmetric_difference(r1.arcs.begin(), r1.arcs.end(), r2.arcs.begin(),
                                      r2.arcs.end(), std::back_inserter(diff));
        Counterexample c;
        c.kind = Counterexample::Kind::Arc;
        c.arc = diff.front();
        c.note = std::binary_search(r1.arcs.begin(), r1.arcs.end(), diff.front())
                     ? "arc only in first reachability graph"
                     : "arc only in second reachability graph";
        v.equivalent = false;
        v.counterexample = c;
        return v;
    }
    auto iso = digraph_isomorphic(r1, r2);
    if (iso) {
        v.equivalent = true;
        v.witness = *iso;
    } else {
        v.equivalent = false;
        Counterexample c;
        c.kind = Counterexample::Kind::Structural;
        c.note = "no arc-preserving bijection between the reachability graphs";
        v.counterexample = c;
    }
    return v;
}

Verdict support_equivalent(const TemporalGraph& g1, const TemporalGraph& g2, Semantics s1,
                           Semantics s2, std::size_t max_vertices) {
    if (g1.vertices != g2.vertices)
        throw Error(Errc::SizeBoundExceeded, "support equivalence requires equal vertex sets");
    auto sup1 = enumerate_path_supports(g1, s1, max_vertices);
    auto sup2 = enumerate_path_supports(g2, s2, max_vertices);
    Verdict v;
    if (sup1 == sup2) {
        v.equivalent = true;
        std::map<VertexId, VertexId> id;
        for (const auto& x : g1.vertices) id[x] = x;
        v.witness = std::move(id);
        return v;
    }
    std::vector<std::vector<VertexId>> diff;
    std::set_symmetric_difference(sup1.begin(), sup1.end(), sup2.begin(), sup2.end(),
                                  std::back_inserter(diff));
    Counterexample c;
    c.kind = Counterexample::Kind::Support;
    c.support = diff.front();
    c.note = sup1.count(diff.front()) ? "support only in first graph" : "support only in second graph";
    v.equivalent = false;
    v.counterexample = c;
    return v;
}

Verdict induced_reachability_equivalent(const TemporalGraph& small, const TemporalGraph& big,
                                        Semantics s_small, Semantics s_big, const Embedding& emb) {
    std::set<VertexId> image;
    for (const auto& v : small.vertices) {
        auto it = emb.map.find(v);
        if (it == emb.map.end())
            throw Error(Errc::EmbeddingOutOfRange, "no image for vertex '" + v + "'");
        if (!big.has_vertex(it->second))
            throw Error(Errc::EmbeddingOutOfRange,
                        "image '" + it->second + "' is not a vertex of the host graph");
        if (!image.insert(it->second).second)
            throw Error(Errc::EmbeddingNotInjective, "image '" + it->second + "' repeated");
    }
    StaticGraph rs = reachability_graph(small, s_small);
    StaticGraph rb = reachability_graph(big, s_big);
    Verdict v;
    for (const auto& u : small.vertices) {
        for (const auto& w : small.vertices) {
            if (u == w) continue;
            bool in_small = rs.has_arc(u, w);
            bool in_big = rb.has_arc(emb.map.at(u), emb.map.at(w));
            if (in_small != in_big) {
                Counterexample c;
                c.kind = Counterexample::Kind::Arc;
                c.arc = {u, w};
                c.note = in_small ? "reachable in the embedded graph only"
                                  : "reachable in the host graph only";
                v.equivalent = false;
                v.counterexample = c;
                return v;
            }
        }
    }
    v.equivalent = true;
    std::map<VertexId, VertexId> w(emb.map.begin(), emb.map.end());
    v.witness = std::move(w);
    return v;
}

} // namespace tempograph
