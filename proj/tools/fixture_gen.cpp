// Regenerates the fixture corpus under fixtures/ (or a directory given as
// argv[1]). Each fixture directory holds graph.json, expected_r.json and
// claim.json; expected_r is the freshly computed reachability graph, which
// the loader re-verifies.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "tempograph/core.hpp"
#include "tempograph/json_io.hpp"
#include "tempograph/reachability.hpp"

using namespace tempograph;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Spec {
    std::string name;
    TemporalGraph graph;
    Semantics semantics;
    std::string member_of;
    std::string separates_from;
    std::string notion;
    std::string provenance;
    std::string notes;
};

TemporalGraph build(bool directed, std::vector<VertexId> vertices,
                    std::vector<GraphDraft::Edge> edges) {
    GraphDraft d;
    d.directed = directed;
    d.vertices = std::move(vertices);
    d.edges = std::move(edges);
    return validate_graph(d);
}

TemporalGraph directed_triangle() {
    return build(true, {"a", "b", "c"},
                 {{"a", "b", {Rat(1)}}, {"b", "c", {Rat(1)}}, {"c", "a", {Rat(1)}}});
}

TemporalGraph proper_four_cycle() {
    return build(true, {"a", "b", "c", "d"},
                 {{"a", "b", {Rat(2)}},
                  {"b", "c", {Rat(1), Rat(5)}},
                  {"c", "d", {Rat(4)}},
                  {"d", "a", {Rat(3)}}});
}

TemporalGraph ud_strict_cycle4() {
    return build(false, {"a", "b", "c", "d"},
                 {{"a", "b", {Rat(1)}},
                  {"b", "c", {Rat(1)}},
                  {"c", "d", {Rat(1)}},
                  {"d", "a", {Rat(1)}}});
}

TemporalGraph crab() {
    // labels follow the chronological-order poset of the proof: the l1/r1
    // edges first, then the a edges, the 3- and 4-arms, the bridge bc, and
    // the l6/r6 edges last
    return build(false,
                 {"l1", "r1", "a", "b", "c", "l3", "l4", "r3", "r4", "l6", "r6"},
                 {{"b", "l1", {Rat(1)}},
                  {"c", "r1", {Rat(1)}},
                  {"b", "a", {Rat(2)}},
                  {"c", "a", {Rat(2)}},
                  {"b", "l3", {Rat(3)}},
                  {"c", "r3", {Rat(3)}},
                  {"b", "l4", {Rat(4)}},
                  {"c", "r4", {Rat(4)}},
                  {"b", "c", {Rat(5)}},
                  {"b", "l6", {Rat(6)}},
                  {"c", "r6", {Rat(6)}}});
}

TemporalGraph alien() {
    const std::vector<std::string> C = {"x", "y", "z"};
    std::vector<VertexId> vs = {"x", "y", "z", "s"};
    std::vector<GraphDraft::Edge> es;
    auto edge = [&](const VertexId& u, const VertexId& v, Rat t) { es.push_back({u, v, {t}}); };

    for (const auto& i : C) {
        vs.push_back("a" + i);
        vs.push_back("b" + i);
        vs.push_back("c" + i);
        vs.push_back("d" + i);
        edge("a" + i, i, Rat(1));
        edge(i, "b" + i, Rat(3));
        edge("c" + i, i, Rat(4));
        edge(i, "d" + i, Rat(6));
    }
    // center cliques at times 2 and 5 (directed 3-cycles; non-strict
    // chaining makes each snapshot strongly connected)
    edge("x", "y", Rat(2));
    edge("y", "z", Rat(2));
    edge("z", "x", Rat(2));
    edge("x", "z", Rat(5));
    edge("z", "y", Rat(5));
    edge("y", "x", Rat(5));

    // helper tokens are h_<alpha>_<beta>: alpha has the in-edge, beta the
    // out-edge; label pairs are reversed in time so the 2-path never chains
    auto helper = [&](const VertexId& alpha, const VertexId& beta, Rat t_in, Rat t_out) {
        VertexId h = "h_" + alpha + "_" + beta;
        vs.push_back(h);
        edge(alpha, h, t_in);
        edge(h, beta, t_out);
        return h;
    };
    for (const auto& i : C) {
        for (const auto& j : C) {
            if (i == j) continue;
            helper(i, "a" + j, Rat(3, 2), Rat(13, 10));           // E1
            helper(i, "c" + j, Rat(9, 2), Rat(43, 10));           // E1
            VertexId hb = helper("b" + j, i, Rat(5, 2), Rat(23, 10)); // E2
            helper("d" + j, i, Rat(11, 2), Rat(53, 10));          // E2
            helper("b" + j, "a" + i, Rat(3, 2), Rat(13, 10));     // E3
            helper("d" + j, "a" + i, Rat(3, 2), Rat(13, 10));     // E3
            helper("d" + j, "c" + i, Rat(9, 2), Rat(43, 10));     // E3
            // E4: paths through the shared vertex s, again non-temporal
            edge("b" + i, "s", Rat(27, 10));
            edge("s", hb, Rat(5, 2));
            edge("h_" + i + "_c" + j, "s", Rat(43, 10));
            edge("s", "c" + j, Rat(41, 10));
        }
    }
    return build(true, vs, es);
}

void write_fixture(const fs::path& root, const Spec& spec) {
    fs::path dir = root / spec.name;
    fs::create_directories(dir);
    StaticGraph r = reachability_graph(spec.graph, spec.semantics);

    std::ofstream(dir / "graph.json") << graph_to_json(spec.graph).dump(2) << "\n";
    std::ofstream(dir / "expected_r.json") << static_to_json(r).dump(2) << "\n";
    json claim = {
        {"semantics", semantics_name(spec.semantics)},
        {"provenance", spec.provenance},
        {"member_of", spec.member_of},
        {"separates_from", spec.separates_from},
        {"notion", spec.notion},
        {"notes", spec.notes},
    };
    std::ofstream(dir / "claim.json") << claim.dump(2) << "\n";
    std::cout << spec.name << ": " << spec.graph.vertices.size() << " vertices, "
              << spec.graph.temporal_edge_count() << " temporal edges, " << r.arcs.size()
              << " reachability arcs\n";
}

} // namespace

int main(int argc, char** argv) {
    fs::path root = argc > 1 ? argv[1] : "fixtures";
    std::vector<Spec> specs;

    specs.push_back({"directed_triangle", directed_triangle(), Semantics::Strict,
                     "d.strict.simple", "d.nonstrict.multi", "reachability", "PAPER_EXACT",
                     "Uniform label 1; strict reachability is exactly the cycle, which no "
                     "non-strict labeling can produce (every non-strict cycle closes a "
                     "transitive arc)."});

    specs.push_back({"nonstrict_simple_triangle", directed_triangle(), Semantics::NonStrict,
                     "d.nonstrict.simple", "d.strict.simple", "support", "PAPER_EXACT",
                     "Under non-strict semantics the uniform triangle carries all six path "
                     "supports; no strict simple labeling carries the three 2-hop supports "
                     "simultaneously."});

    specs.push_back({"proper_four_cycle", proper_four_cycle(), Semantics::Strict,
                     "d.proper.multi", "d.nonstrict.simple", "reachability", "PAPER_RECONSTRUCTED",
                     "Labeling reconstructed from the proof constraints: the only transitive "
                     "arcs are (a,c) via b and (b,d) via c. The figure labels are not in the "
                     "text."});

    specs.push_back({"ud_strict_cycle4", ud_strict_cycle4(), Semantics::Strict,
                     "ud.strict.simple", "d.nonstrict.multi", "reachability",
                     "PAPER_RECONSTRUCTED",
                     "Labels reconstructed: a uniform label leaves the bidirected 4-cycle "
                     "without chords, and every reachability arc must be a footprint edge in "
                     "any non-strict realization."});

    specs.push_back({"crab", crab(), Semantics::NonStrict, "ud.nonstrict.simple",
                     "ud.strict.simple", "reachability", "PAPER_RECONSTRUCTED",
                     "Only text-forced edges are encoded; the figure's dotted bulk edges are "
                     "not enumerable from the proof. Labels realize the chronological-order "
                     "poset stated in the proof."});

    specs.push_back({"alien", alien(), Semantics::NonStrict, "d.nonstrict.simple",
                     "d.proper.simple", "reachability", "PAPER_RECONSTRUCTED",
                     "Helper edge sets E1-E4 verbatim from the proof; base edges chosen to "
                     "satisfy the proof's reachability bullets (center cliques at times 2 "
                     "and 5)."});

    for (const auto& s : specs) write_fixture(root, s);
    return 0;
}
