#include <doctest.h>

#include <random>

#include "tempograph/equivalence.hpp"
#include "tempograph/reachability.hpp"
#include "tempograph/transforms.hpp"
#include "support/build.hpp"
#include "support/random_graphs.hpp"

using namespace tempograph;
using namespace tempograph::testing;

namespace {

TemporalGraph suite_graph(std::mt19937& rng, SettingClass setting, SuiteParams p) {
    p.directed = setting.direction == Direction::Directed;
    TemporalGraph g = setting.flavor == Flavor::Proper ? random_proper_graph(rng, p)
                                                       : random_graph(rng, p);
    if (setting.labeling == GraphLabeling::Simple)
        for (auto& e : g.edges) e.labels.resize(1);
    return g;
}

} // namespace

TEST_CASE("doubling replaces each undirected edge by two opposing arcs") {
    TemporalGraph g = tg(false, {"u", "v"}, {{"u", "v", {3}}});
    TransformOutput out = undirected_to_directed(g, false);
    REQUIRE(out.graph.edges.size() == 2);
    CHECK(out.graph.edges[0].tail == "u");
    CHECK(out.graph.edges[0].labels == std::vector<Label>{Rat(3)});
    CHECK(out.graph.edges[1].tail == "v");
    CHECK(out.graph.edges[1].labels == std::vector<Label>{Rat(3)});

    CHECK_THROWS_AS(undirected_to_directed(tg(true, {"a", "b"}, {{"a", "b", {1}}}), false), Error);
}

TEST_CASE("doubling preserves the reachability graph and simplicity") {
    std::mt19937 rng(1001);
    SuiteParams p;
    p.directed = false;
    for (int i = 0; i < 120; ++i) {
        TemporalGraph g = random_graph(rng, p);
        TransformOutput out = undirected_to_directed(g, false);
        for (Semantics s : {Semantics::Strict, Semantics::NonStrict})
            CHECK(reachability_graph(out.graph, s) == reachability_graph(g, s));
        CHECK(is_simple(out.graph) == is_simple(g));
    }
}

TEST_CASE("tilted doubling keeps proper inputs proper with the same reachability") {
    TemporalGraph path = tg(false, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {2}}});
    REQUIRE(is_proper(path, Properness::Classic));
    TransformOutput out = undirected_to_directed(path, true);
    CHECK(is_proper(out.graph, Properness::Classic));
    for (Semantics s : {Semantics::Strict, Semantics::NonStrict})
        CHECK(reachability_graph(out.graph, s) == reachability_graph(path, s));

    std::mt19937 rng(1002);
    SuiteParams p;
    p.directed = false;
    for (int i = 0; i < 100; ++i) {
        TemporalGraph g = random_proper_graph(rng, p);
        TransformOutput t = undirected_to_directed(g, true);
        CHECK(is_proper(t.graph, Properness::Classic));
        CHECK(reachability_graph(t.graph, Semantics::Strict) ==
              reachability_graph(g, Semantics::Strict));
    }
}

TEST_CASE("support dilation of a 2-cycle snapshot") {
    TemporalGraph g = tg(true, {"a", "b"}, {{"a", "b", {1}}, {"b", "a", {1}}});
    TransformOutput out = support_dilation(g);
    TemporalGraph norm = normalize_labels(out.graph);
    REQUIRE(norm.edges.size() == 2);
    CHECK(norm.edges[0].tail == "a");
    CHECK(norm.edges[0].labels == std::vector<Label>{Rat(1)});
    CHECK(norm.edges[1].tail == "b");
    CHECK(norm.edges[1].labels == std::vector<Label>{Rat(2)});
    CHECK(enumerate_path_supports(out.graph, Semantics::Strict) ==
          enumerate_path_supports(g, Semantics::NonStrict));

    CHECK(support_dilation(tg(true, {"a", "b"}, {})).graph.edges.empty());
    CHECK_THROWS_AS(support_dilation(tg(false, {"a", "b"}, {{"a", "b", {1}}})), Error);
}

TEST_CASE("support dilation: proper output, supports preserved") {
    std::mt19937 rng(2024);
    SuiteParams p;
    p.directed = true;
    for (int i = 0; i < 150; ++i) {
        TemporalGraph g = random_graph(rng, p);
        TransformOutput out = support_dilation(g);
        CHECK(is_proper(out.graph, Properness::Classic));
        CHECK(enumerate_path_supports(out.graph, Semantics::Strict) ==
              enumerate_path_supports(g, Semantics::NonStrict));
        // an already-proper graph stays support-equivalent too
        if (is_proper(g, Properness::Classic))
            CHECK(enumerate_path_supports(out.graph, Semantics::Strict) ==
                  enumerate_path_supports(g, Semantics::Strict));
    }
}

TEST_CASE("spanning tree labeling") {
    StaticGraph two;
    two.directed = false;
    two.vertices = {"a", "b"};
    two.arcs = {{"a", "b"}};
    auto edges = spanning_tree_labeling(two, Rat(0));
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].labels == std::vector<Label>{Rat(1)});
    CHECK(edges[1].labels == std::vector<Label>{Rat(2)});

    // star rooted at its center: three up arcs then three down arcs
    StaticGraph star;
    star.directed = false;
    star.vertices = {"a", "b", "c", "d"};
    star.arcs = {{"a", "b"}, {"a", "c"}, {"a", "d"}};
    auto star_edges = spanning_tree_labeling(star, Rat(0));
    REQUIRE(star_edges.size() == 6);
    GraphDraft d;
    d.directed = true;
    d.vertices = star.vertices;
    for (const auto& e : star_edges) d.edges.push_back({e.tail, e.head, e.labels});
    CHECK(is_temporally_connected(validate_graph(d), Semantics::Strict));

    StaticGraph split;
    split.directed = false;
    split.vertices = {"a", "b", "c"};
    split.arcs = {{"a", "b"}};
    CHECK_THROWS_AS(spanning_tree_labeling(split, Rat(0)), Error);
}

TEST_CASE("spanning tree labeling connects 200 random trees") {
    std::mt19937 rng(60309);
    for (int i = 0; i < 200; ++i) {
        StaticGraph tree = random_tree(rng, 8);
        auto edges = spanning_tree_labeling(tree, Rat(0));
        GraphDraft d;
        d.directed = true;
        d.vertices = tree.vertices;
        for (const auto& e : edges) d.edges.push_back({e.tail, e.head, e.labels});
        TemporalGraph g = validate_graph(d);
        CHECK(is_temporally_connected(g, Semantics::Strict));
        CHECK(is_proper(g, Properness::Classic));
    }
}

TEST_CASE("reachability dilation of an undirected path snapshot") {
    TemporalGraph g =
        tg(false, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}});
    TransformOutput out = reachability_dilation(g);
    REQUIRE(out.graph.directed);
    REQUIRE(out.graph.edges.size() == 4);
    auto find = [&](const std::string& u, const std::string& v) {
        for (const auto& e : out.graph.edges)
            if (e.tail == u && e.head == v) return e.labels.front();
        FAIL("missing arc ", u, "->", v);
        return Rat(0);
    };
    CHECK(find("c", "b") == Rat(1));
    CHECK(find("b", "a") == Rat(2));
    CHECK(find("a", "b") == Rat(3));
    CHECK(find("b", "c") == Rat(4));
    CHECK(reachability_graph(out.graph, Semantics::Strict).arcs.size() == 6);
}

TEST_CASE("reachability dilation keeps a DAG snapshot with increasing labels") {
    TemporalGraph g = tg(true, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}});
    TransformOutput out = reachability_dilation(g);
    REQUIRE(out.graph.edges.size() == 2);
    CHECK(out.graph.edges[0].tail == "a");
    CHECK(out.graph.edges[0].labels == std::vector<Label>{Rat(1)});
    CHECK(out.graph.edges[1].tail == "b");
    CHECK(out.graph.edges[1].labels == std::vector<Label>{Rat(2)});
    CHECK(reachability_dilation(tg(true, {"x"}, {})).graph.edges.empty());
}

TEST_CASE("reachability dilation: R equality, size bound, properness, simplicity") {
    std::mt19937 rng(8086);
    SuiteParams p;
    for (int i = 0; i < 150; ++i) {
        p.directed = i % 2 == 0;
        TemporalGraph g = random_graph(rng, p);
        TransformOutput out = reachability_dilation(g);
        CHECK(reachability_graph(out.graph, Semantics::Strict) ==
              reachability_graph(g, Semantics::NonStrict));
        CHECK(out.graph.temporal_edge_count() <= 2 * g.temporal_edge_count());
        CHECK(is_proper(out.graph, Properness::Classic));
        if (!g.directed && is_simple(g)) CHECK(is_simple(out.graph));
    }
    // undirected simple inputs give simple outputs
    p.directed = false;
    for (int i = 0; i < 80; ++i) {
        TemporalGraph g = random_graph(rng, p);
        for (auto& e : g.edges) e.labels.resize(1);
        TransformOutput out = reachability_dilation(g);
        CHECK(is_simple(out.graph));
        CHECK(reachability_graph(out.graph, Semantics::Strict) ==
              reachability_graph(g, Semantics::NonStrict));
    }
}

TEST_CASE("saturation takes the reachability graph as an all-ones footprint") {
    TemporalGraph triangle =
        tg(true, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}, {"c", "a", {1}}});
    TransformOutput out = saturate(triangle, Semantics::NonStrict);
    CHECK(out.graph.edges.size() == 6);
    for (const auto& e : out.graph.edges) CHECK(e.labels == std::vector<Label>{Rat(1)});
    CHECK(reachability_graph(out.graph, Semantics::Strict) ==
          reachability_graph(triangle, Semantics::NonStrict));

    // a graph with no transitive arcs keeps its footprint
    TemporalGraph arc = tg(true, {"a", "b"}, {{"a", "b", {4}}});
    TransformOutput flat = saturate(arc, Semantics::Strict);
    CHECK(footprint(flat.graph) == footprint(arc));
    CHECK(flat.graph.lifetime() == 1);

    CHECK_THROWS_AS(saturate(tg(false, {"a", "b"}, {{"a", "b", {1}}}), Semantics::Strict), Error);
}

TEST_CASE("saturation suite: lifetime one, simple, same reachability") {
    std::mt19937 rng(11);
    SuiteParams p;
    p.directed = true;
    for (int i = 0; i < 150; ++i) {
        TemporalGraph g = random_graph(rng, p);
        for (Semantics s : {Semantics::Strict, Semantics::NonStrict}) {
            TransformOutput out = saturate(g, s);
            CHECK(out.graph.lifetime() <= 1);
            CHECK(is_simple(out.graph));
            CHECK(reachability_graph(out.graph, Semantics::Strict) == reachability_graph(g, s));
        }
    }
}

TEST_CASE("semaphore subdivides a path with tilted labels") {
    TemporalGraph g = tg(true, {"u", "v", "w"}, {{"u", "v", {1}}, {"v", "w", {2}}});
    TransformOutput out = semaphore(g);
    REQUIRE(out.graph.edges.size() == 4);
    CHECK(out.graph.distinct_labels() ==
          std::vector<Label>{Rat(7, 8), Rat(9, 8), Rat(14, 8), Rat(18, 8)});
    TemporalGraph norm = normalize_labels(out.graph);
    CHECK(norm.distinct_labels() == std::vector<Label>{Rat(1), Rat(2), Rat(3), Rat(4)});

    Verdict v = induced_reachability_equivalent(g, out.graph, Semantics::Strict,
                                                Semantics::Strict, out.embedding);
    CHECK(v.equivalent);
    StaticGraph r = reachability_graph(out.graph, Semantics::Strict);
    CHECK(r.has_arc("u", "w"));
}

TEST_CASE("semaphore on a single edge and on the triangle") {
    TemporalGraph single = tg(true, {"u", "v"}, {{"u", "v", {1}}});
    TransformOutput out = semaphore(single);
    REQUIRE(out.graph.edges.size() == 2);
    CHECK(out.graph.edges[0].labels != out.graph.edges[1].labels);
    CHECK(is_proper(out.graph, Properness::Classic));

    TemporalGraph triangle =
        tg(true, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}, {"c", "a", {1}}});
    TransformOutput tri = semaphore(triangle);
    StaticGraph r = reachability_graph(tri.graph, Semantics::Strict);
    for (const auto& [u, v] : std::vector<std::pair<VertexId, VertexId>>{
             {"a", "b"}, {"b", "c"}, {"c", "a"}})
        CHECK(r.has_arc(u, v));
    for (const auto& [u, v] : std::vector<std::pair<VertexId, VertexId>>{
             {"a", "c"}, {"b", "a"}, {"c", "b"}})
        CHECK_FALSE(r.has_arc(u, v));
}

TEST_CASE("semaphore suite: simple, proper, induced reachability preserved") {
    std::mt19937 rng(90210);
    SuiteParams p;
    p.directed = true;
    for (int i = 0; i < 150; ++i) {
        TemporalGraph g = random_graph(rng, p);
        TransformOutput out = semaphore(g);
        CHECK(is_simple(out.graph));
        CHECK(is_proper(out.graph, Properness::Classic));
        Verdict v = induced_reachability_equivalent(g, out.graph, Semantics::Strict,
                                                    Semantics::Strict, out.embedding);
        CHECK(v.equivalent);
    }
}

TEST_CASE("to_happy lands in directed & proper & simple for all 12 source settings") {
    std::mt19937 rng(314159);
    SuiteParams p;
    for (const auto& setting : all_settings()) {
        for (int i = 0; i < 25; ++i) {
            TemporalGraph g = suite_graph(rng, setting, p);
            TransformOutput out = to_happy(g, setting);
            CHECK(out.graph.directed);
            CHECK(is_simple(out.graph));
            CHECK(is_proper(out.graph, Properness::Classic));
            Verdict v = induced_reachability_equivalent(g, out.graph, semantics_of(setting.flavor),
                                                        Semantics::Strict, out.embedding);
            CHECK(v.equivalent);
        }
    }
}

TEST_CASE("to_happy edge cases") {
    TemporalGraph ud_triangle =
        tg(false, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}, {"a", "c", {1}}});
    TransformOutput out =
        to_happy(ud_triangle, {Direction::Undirected, Flavor::NonStrict, GraphLabeling::Simple});
    Verdict v = induced_reachability_equivalent(ud_triangle, out.graph, Semantics::NonStrict,
                                                Semantics::Strict, out.embedding);
    CHECK(v.equivalent);
    StaticGraph induced = reachability_graph(out.graph, Semantics::Strict);
    for (const auto& u : ud_triangle.vertices)
        for (const auto& w : ud_triangle.vertices)
            if (u != w) CHECK(induced.has_arc(u, w));

    TemporalGraph empty = tg(true, {"a"}, {});
    CHECK(to_happy(empty, {Direction::Directed, Flavor::Strict, GraphLabeling::Simple})
              .graph.edges.empty());
}

TEST_CASE("transform reports carry edge and lifetime counts") {
    TemporalGraph g = tg(true, {"a", "b"}, {{"a", "b", {1, 2}}});
    TransformOutput out = semaphore(g);
    CHECK(out.report.method == "semaphore");
    CHECK(out.report.input_edges == 2);
    CHECK(out.report.output_edges == 4);
    CHECK(out.report.input_lifetime == 2);
    CHECK(out.report.simple);
    CHECK(out.report.proper);
}
