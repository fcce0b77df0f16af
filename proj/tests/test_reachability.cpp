#include <doctest.h>

#include <random>

#include "tempograph/reachability.hpp"
#include "support/build.hpp"
#include "support/oracle.hpp"
#include "support/random_graphs.hpp"

using namespace tempograph;
using namespace tempograph::testing;

namespace {

TemporalGraph uniform_triangle() {
    return tg(true, {"a", "b", "c"}, {{"a", "b", {1}}, {"b", "c", {1}}, {"c", "a", {1}}});
}

} // namespace

TEST_CASE("earliest arrival on the uniform directed triangle") {
    TemporalGraph g = uniform_triangle();
    ArrivalMap strict = earliest_arrival(g, "a", Semantics::Strict);
    CHECK(strict.arrivals.at("a").kind == Arrival::Kind::Source);
    CHECK(strict.arrivals.at("b").kind == Arrival::Kind::At);
    CHECK(strict.arrivals.at("b").at == Rat(1));
    CHECK(strict.arrivals.at("c").kind == Arrival::Kind::Unreached);

    ArrivalMap ns = earliest_arrival(g, "a", Semantics::NonStrict);
    CHECK(ns.arrivals.at("b").at == Rat(1));
    CHECK(ns.arrivals.at("c").at == Rat(1));

    TemporalGraph isolated = tg(true, {"a", "b"}, {});
    ArrivalMap only = earliest_arrival(isolated, "a", Semantics::Strict);
    CHECK(only.arrivals.at("a").kind == Arrival::Kind::Source);
    CHECK_FALSE(only.reached("b"));

    CHECK_THROWS_AS(earliest_arrival(g, "zz", Semantics::Strict), Error);
}

TEST_CASE("reachability graph of the uniform triangle") {
    TemporalGraph g = uniform_triangle();
    CHECK(reachability_graph(g, Semantics::Strict).arcs ==
          arcs({{"a", "b"}, {"b", "c"}, {"c", "a"}}));
    CHECK(reachability_graph(g, Semantics::NonStrict).arcs.size() == 6);
}

TEST_CASE("proper four cycle reachability matches the proof narrative") {
    GraphDraft d;
    d.directed = true;
    d.vertices = {"a", "b", "c", "d"};
    d.edges = {{"a", "b", {Rat(2)}},
               {"b", "c", {Rat(1), Rat(5)}},
               {"c", "d", {Rat(4)}},
               {"d", "a", {Rat(3)}}};
    TemporalGraph g = validate_graph(d);
    auto expected =
        arcs({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}, {"b", "d"}});
    CHECK(reachability_graph(g, Semantics::Strict).arcs == expected);
    CHECK(reachability_graph(g, Semantics::NonStrict).arcs == expected);
}

TEST_CASE("temporal connectivity") {
    TemporalGraph g = uniform_triangle();
    CHECK(is_temporally_connected(g, Semantics::NonStrict));
    CHECK_FALSE(is_temporally_connected(g, Semantics::Strict));
    CHECK(is_temporally_connected(tg(true, {"solo"}, {}), Semantics::Strict));
}

TEST_CASE("path support enumeration on the triangle") {
    TemporalGraph g = uniform_triangle();
    std::set<std::vector<VertexId>> ns = enumerate_path_supports(g, Semantics::NonStrict);
    std::set<std::vector<VertexId>> expected = {{"a", "b"}, {"b", "c"}, {"c", "a"},
                                                {"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}};
    CHECK(ns == expected);
    std::set<std::vector<VertexId>> st = enumerate_path_supports(g, Semantics::Strict);
    CHECK(st == std::set<std::vector<VertexId>>{{"a", "b"}, {"b", "c"}, {"c", "a"}});

    TemporalGraph single = tg(true, {"u", "v"}, {{"u", "v", {1}}});
    CHECK(enumerate_path_supports(single, Semantics::Strict).size() == 1);

    TemporalGraph big = tg(true, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"}, {});
    CHECK_THROWS_AS(enumerate_path_supports(big, Semantics::Strict), Error);
}

TEST_CASE("earliest arrival agrees with the path-enumeration oracle, exhaustively on tiny graphs") {
    // all directed graphs on 3 vertices with up to 3 edges, label sets over {1,2}
    std::vector<std::pair<std::string, std::string>> pool = {
        {"a", "b"}, {"b", "a"}, {"a", "c"}, {"c", "a"}, {"b", "c"}, {"c", "b"}};
    std::vector<std::vector<Rat>> label_sets = {{Rat(1)}, {Rat(2)}, {Rat(1), Rat(2)}};
    for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        std::vector<int> chosen;
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i)) chosen.push_back(i);
        int combos = 1;
        for (std::size_t i = 0; i < chosen.size(); ++i) combos *= 3;
        for (int pick = 0; pick < combos; ++pick) {
            GraphDraft d;
            d.directed = true;
            d.vertices = {"a", "b", "c"};
            int p = pick;
            for (int idx : chosen) {
                d.edges.push_back({pool[idx].first, pool[idx].second, label_sets[p % 3]});
                p /= 3;
            }
            TemporalGraph g = validate_graph(d);
            for (Semantics s : {Semantics::Strict, Semantics::NonStrict}) {
                for (const auto& src : g.vertices) {
                    ArrivalMap am = earliest_arrival(g, src, s);
                    OracleArrivals oa = oracle_arrivals(g, src, s);
                    for (const auto& [v, expect] : oa.arrival) {
                        const Arrival& got = am.arrivals.at(v);
                        if (expect) {
                            REQUIRE(got.kind == Arrival::Kind::At);
                            REQUIRE(got.at == *expect);
                        } else {
                            REQUIRE(got.kind == Arrival::Kind::Unreached);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("earliest arrival agrees with the oracle on the randomized suite") {
    std::mt19937 rng(424242);
    SuiteParams p;
    p.max_vertices = 5;
    p.max_temporal_edges = 6;
    for (int i = 0; i < 500; ++i) {
        p.directed = i % 2 == 0;
        TemporalGraph g = random_graph(rng, p);
        for (Semantics s : {Semantics::Strict, Semantics::NonStrict})
            CHECK(reachability_graph(g, s) == oracle_reachability(g, s));
    }
}

TEST_CASE("parallel reachability equals the serial reference") {
    std::mt19937 rng(31337);
    SuiteParams p;
    for (int i = 0; i < 300; ++i) {
        p.directed = i % 2 == 0;
        TemporalGraph g = random_graph(rng, p);
        for (Semantics s : {Semantics::Strict, Semantics::NonStrict})
            CHECK(reachability_graph(g, s) == reachability_graph_serial(g, s));
    }
}

TEST_CASE("structural properties of reachability") {
    std::mt19937 rng(777);
    SuiteParams p;
    std::uniform_int_distribution<int> lab(1, 4);
    for (int i = 0; i < 200; ++i) {
        p.directed = i % 2 == 0;
        TemporalGraph g = random_graph(rng, p);
        StaticGraph rs = reachability_graph(g, Semantics::Strict);
        StaticGraph rn = reachability_graph(g, Semantics::NonStrict);

        // strict arcs are a subset of non-strict arcs
        CHECK(std::includes(rn.arcs.begin(), rn.arcs.end(), rs.arcs.begin(), rs.arcs.end()));

        // every footprint arc appears, both orientations for undirected
        for (const auto& e : g.edges) {
            CHECK(rs.has_arc(e.tail, e.head));
            if (!g.directed) CHECK(rs.has_arc(e.head, e.tail));
        }

        // adding a label never removes an arc
        if (!g.edges.empty()) {
            TemporalGraph grown = g;
            auto& target = grown.edges[i % grown.edges.size()];
            Rat extra(lab(rng));
            target.labels.push_back(extra);
            std::sort(target.labels.begin(), target.labels.end());
            target.labels.erase(std::unique(target.labels.begin(), target.labels.end()),
                                target.labels.end());
            for (Semantics s : {Semantics::Strict, Semantics::NonStrict}) {
                StaticGraph before = reachability_graph(g, s);
                StaticGraph after = reachability_graph(grown, s);
                CHECK(std::includes(after.arcs.begin(), after.arcs.end(), before.arcs.begin(),
                                    before.arcs.end()));
            }
        }
    }
}

TEST_CASE("non-strict cycles always close a transitive arc") {
    // every multi-labeling of the directed cycle footprint C_n with label
    // sets over {1..4}: the non-strict reachability graph is never exactly
    // the cycle's arc set
    for (int n : {3, 4}) {
        std::vector<VertexId> vs;
        for (int i = 0; i < n; ++i) vs.push_back(std::string(1, char('a' + i)));
        std::vector<std::vector<Rat>> sets;
        for (int mask = 1; mask < 16; ++mask) {
            std::vector<Rat> s;
            for (int b = 0; b < 4; ++b)
                if (mask & (1 << b)) s.push_back(Rat(b + 1));
            sets.push_back(s);
        }
        StaticGraph cycle;
        cycle.directed = true;
        cycle.vertices = vs;
        for (int i = 0; i < n; ++i) cycle.arcs.emplace_back(vs[i], vs[(i + 1) % n]);
        std::sort(cycle.arcs.begin(), cycle.arcs.end());

        long long combos = 1;
        for (int i = 0; i < n; ++i) combos *= 15;
        for (long long pick = 0; pick < combos; ++pick) {
            GraphDraft d;
            d.directed = true;
            d.vertices = vs;
            long long p = pick;
            for (int i = 0; i < n; ++i) {
                d.edges.push_back({vs[i], vs[(i + 1) % n], sets[p % 15]});
                p /= 15;
            }
            StaticGraph r = reachability_graph(validate_graph(d), Semantics::NonStrict);
            REQUIRE(r.arcs != cycle.arcs);
        }
    }
}
