#include <doctest.h>

#include <random>

#include "tempograph/equivalence.hpp"
#include "tempograph/transforms.hpp"
#include "support/build.hpp"
#include "support/random_graphs.hpp"

using namespace tempograph;
using namespace tempograph::testing;

namespace {

StaticGraph sg(std::vector<VertexId> vs, std::vector<std::pair<std::string, std::string>> as) {
    StaticGraph s;
    s.directed = true;
    s.vertices = std::move(vs);
    std::sort(s.vertices.begin(), s.vertices.end());
    for (auto& [u, v] : as) s.arcs.emplace_back(u, v);
    std::sort(s.arcs.begin(), s.arcs.end());
    return s;
}

} // namespace

TEST_CASE("digraph isomorphism on small graphs") {
    StaticGraph c3a = sg({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    StaticGraph c3b = sg({"x", "y", "z"}, {{"y", "x"}, {"x", "z"}, {"z", "y"}});
    auto iso = digraph_isomorphic(c3a, c3b);
    REQUIRE(iso.has_value());
    for (const auto& [u, v] : c3a.arcs)
        CHECK(c3b.has_arc(iso->at(u), iso->at(v)));

    StaticGraph path = sg({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    StaticGraph c3x = sg({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK_FALSE(digraph_isomorphic(path, c3x).has_value());

    StaticGraph big;
    big.directed = true;
    for (int i = 0; i < 13; ++i) big.vertices.push_back(std::string(1, char('a' + i)));
    CHECK_THROWS_AS(digraph_isomorphic(big, big), Error);
}

TEST_CASE("digraph isomorphism is reflexive and symmetric on random graphs") {
    std::mt19937 rng(2718);
    SuiteParams p;
    p.directed = true;
    for (int i = 0; i < 60; ++i) {
        StaticGraph a = footprint(random_graph(rng, p));
        StaticGraph b = footprint(random_graph(rng, p));
        CHECK(digraph_isomorphic(a, a).has_value());
        auto ab = digraph_isomorphic(a, b);
        auto ba = digraph_isomorphic(b, a);
        CHECK(ab.has_value() == ba.has_value());
        if (ab) {
            for (const auto& [u, v] : a.arcs) CHECK(b.has_arc(ab->at(u), ab->at(v)));
            // bijection preserves non-arcs too
            for (const auto& u : a.vertices)
                for (const auto& v : a.vertices)
                    if (u != v && !a.has_arc(u, v)) CHECK_FALSE(b.has_arc(ab->at(u), ab->at(v)));
        }
    }
}

TEST_CASE("reachability equivalence identity mode") {
    TemporalGraph triangle =
        tg(true, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}, {"c", "a", {1}}});
    Verdict same = reachability_equivalent(triangle, triangle, Semantics::Strict,
                                           Semantics::Strict, EquivMode::Identity);
    CHECK(same.equivalent);
    REQUIRE(same.witness.has_value());

    Verdict diff = reachability_equivalent(triangle, triangle, Semantics::Strict,
                                           Semantics::NonStrict, EquivMode::Identity);
    CHECK_FALSE(diff.equivalent);
    REQUIRE(diff.counterexample.has_value());
    CHECK(diff.counterexample->kind == Counterexample::Kind::Arc);
    CHECK(diff.counterexample->arc == std::make_pair(VertexId("a"), VertexId("c")));

    // counterexample re-verifies: present in exactly one side
    StaticGraph r1 = reachability_graph(triangle, Semantics::Strict);
    StaticGraph r2 = reachability_graph(triangle, Semantics::NonStrict);
    auto [u, v] = diff.counterexample->arc;
    CHECK(r1.has_arc(u, v) != r2.has_arc(u, v));
}

TEST_CASE("reachability equivalence across transformations") {
    std::mt19937 rng(5555);
    SuiteParams p;
    p.directed = true;
    for (int i = 0; i < 100; ++i) {
        TemporalGraph g = random_graph(rng, p);
        TransformOutput dil = reachability_dilation(g);
        CHECK(reachability_equivalent(g, dil.graph, Semantics::NonStrict, Semantics::Strict,
                                      EquivMode::Identity)
                  .equivalent);
        for (Semantics s : {Semantics::Strict, Semantics::NonStrict}) {
            TransformOutput sat = saturate(g, s);
            CHECK(reachability_equivalent(g, sat.graph, s, Semantics::Strict, EquivMode::Identity)
                      .equivalent);
        }
    }
}

TEST_CASE("reachability equivalence isomorphism mode") {
    TemporalGraph c3 = tg(true, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}, {"c", "a", {1}}});
    TemporalGraph c3r = tg(true, {"p", "q", "r"}, {{"q", "p", {1}}, {"p", "r", {1}}, {"r", "q", {1}}});
    Verdict v = reachability_equivalent(c3, c3r, Semantics::Strict, Semantics::Strict,
                                        EquivMode::Isomorphism);
    CHECK(v.equivalent);
    REQUIRE(v.witness.has_value());
}

TEST_CASE("the proper 4-cycle reachability graph is isomorphic to a relabeled copy") {
    StaticGraph r = sg({"a", "b", "c", "d"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}, {"b", "d"}});
    StaticGraph relabeled = sg({"p", "q", "r", "s"},
                               {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "p"}, {"p", "r"}, {"q", "s"}});
    auto iso = digraph_isomorphic(r, relabeled);
    REQUIRE(iso.has_value());
    for (const auto& [u, v] : r.arcs) CHECK(relabeled.has_arc(iso->at(u), iso->at(v)));
}

TEST_CASE("support equivalence") {
    TemporalGraph triangle =
        tg(true, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}, {"c", "a", {1}}});
    CHECK(support_equivalent(triangle, triangle, Semantics::Strict, Semantics::Strict).equivalent);

    std::mt19937 rng(606);
    SuiteParams p;
    p.directed = true;
    for (int i = 0; i < 80; ++i) {
        TemporalGraph g = random_graph(rng, p);
        TransformOutput dil = support_dilation(g);
        CHECK(support_equivalent(g, dil.graph, Semantics::NonStrict, Semantics::Strict).equivalent);
    }

    // saturation replaces 2-hop supports by direct arcs on the proper 4-cycle
    GraphDraft d;
    d.directed = true;
    d.vertices = {"a", "b", "c", "d"};
    d.edges = {{"a", "b", {Rat(2)}},
               {"b", "c", {Rat(1), Rat(5)}},
               {"c", "d", {Rat(4)}},
               {"d", "a", {Rat(3)}}};
    TemporalGraph cyc = validate_graph(d);
    TransformOutput sat = saturate(cyc, Semantics::Strict);
    Verdict v = support_equivalent(cyc, sat.graph, Semantics::Strict, Semantics::Strict);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->kind == Counterexample::Kind::Support);
    // the counterexample support exists in exactly one side
    auto s1 = enumerate_path_supports(cyc, Semantics::Strict);
    auto s2 = enumerate_path_supports(sat.graph, Semantics::Strict);
    CHECK(s1.count(v.counterexample->support) != s2.count(v.counterexample->support));
}

TEST_CASE("induced reachability equivalence and embedding errors") {
    TemporalGraph g = tg(true, {"a", "b"}, {{"a", "b", {1}}});
    TemporalGraph host = tg(true, {"a", "b", "zz"}, {{"a", "b", {1}}});
    CHECK(induced_reachability_equivalent(g, host, Semantics::Strict, Semantics::Strict,
                                          Embedding::identity(g.vertices))
              .equivalent);

    // disconnected image misses the arc
    Embedding bad;
    bad.map = {{"a", "a"}, {"b", "zz"}};
    Verdict v = induced_reachability_equivalent(g, host, Semantics::Strict, Semantics::Strict, bad);
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.counterexample.has_value());

    Embedding repeated;
    repeated.map = {{"a", "a"}, {"b", "a"}};
    CHECK_THROWS_WITH_AS(induced_reachability_equivalent(g, host, Semantics::Strict,
                                                         Semantics::Strict, repeated),
                         doctest::Contains("EMBEDDING_NOT_INJECTIVE"), Error);

    Embedding outside;
    outside.map = {{"a", "a"}, {"b", "nope"}};
    CHECK_THROWS_WITH_AS(induced_reachability_equivalent(g, host, Semantics::Strict,
                                                         Semantics::Strict, outside),
                         doctest::Contains("EMBEDDING_OUT_OF_RANGE"), Error);
}

TEST_CASE("equivalence strength chain on the randomized suite") {
    std::mt19937 rng(140);
    SuiteParams p;
    for (int i = 0; i < 150; ++i) {
        p.directed = i % 2 == 0;
        TemporalGraph g1 = random_graph(rng, p);
        TemporalGraph g2 = random_graph(rng, p);
        if (g1.vertices != g2.vertices) continue;
        for (Semantics s1 : {Semantics::Strict, Semantics::NonStrict}) {
            for (Semantics s2 : {Semantics::Strict, Semantics::NonStrict}) {
                bool sup = support_equivalent(g1, g2, s1, s2).equivalent;
                bool reach =
                    reachability_equivalent(g1, g2, s1, s2, EquivMode::Identity).equivalent;
                bool induced = induced_reachability_equivalent(
                                   g1, g2, s1, s2, Embedding::identity(g1.vertices))
                                   .equivalent;
                if (sup) CHECK(reach);
                if (reach) CHECK(induced);
            }
        }
    }
}
