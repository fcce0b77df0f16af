#include "tempograph/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "tempograph/json_io.hpp"

namespace tempograph {

namespace fs = std::filesystem;
using nlohmann::json;

const char* provenance_name(Provenance p) {
    return p == Provenance::PaperExact ? "PAPER_EXACT" : "PAPER_RECONSTRUCTED";
}

std::string default_fixture_root() {
    if (const char* env = std::getenv("TEMPOGRAPH_FIXTURES")) return env;
    return "fixtures";
}

namespace {

json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, path.string() + ": " + e.what());
    }
    return j;
}

FixtureClaim claim_from_json(const json& j) {
    FixtureClaim c;
    c.member_of = parse_setting(j.at("member_of").get<std::string>());
    c.separates_from = parse_setting(j.at("separates_from").get<std::string>());
    c.notion = j.at("notion").get<std::string>();
    c.notes = j.value("notes", "");
    return c;
}

} // namespace

Fixture get_fixture(const std::string& name, const std::string& root) {
    fs::path dir = fs::path(root) / name;
    if (!fs::is_directory(dir))
        throw Error(Errc::UnknownFixture, "'" + name + "' under '" + root + "'");
    Fixture f;
    f.name = name;
    f.graph = graph_from_json(read_json(dir / "graph.json"));
    f.expected_r = static_from_json(read_json(dir / "expected_r.json"));
    json claim = read_json(dir / "claim.json");
    f.semantics = parse_semantics(claim.at("semantics").get<std::string>());
    f.claim = claim_from_json(claim);
    std::string prov = claim.at("provenance").get<std::string>();
    f.provenance = prov == "PAPER_EXACT" ? Provenance::PaperExact : Provenance::PaperReconstructed;

    // load-time gate: the stored reachability graph must match a fresh run
    if (reachability_graph(f.graph, f.semantics) != f.expected_r)
        throw Error(Errc::ParseError,
                    "fixture '" + name + "': stored expected_r does not match the recomputed "
                    "reachability graph");
    return f;
}

std::vector<FixtureInfo> list_fixtures(const std::string& root) {
    if (!fs::is_directory(root))
        throw Error(Errc::ParseError, "fixture root '" + root + "' is not a directory");
    std::vector<FixtureInfo> out;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_directory()) continue;
        fs::path claim_path = entry.path() / "claim.json";
        if (!fs::exists(claim_path)) continue;
        json claim = read_json(claim_path);
        FixtureInfo info;
        info.name = entry.path().filename().string();
        info.claim = claim_from_json(claim);
        std::string prov = claim.at("provenance").get<std::string>();
        info.provenance =
            prov == "PAPER_EXACT" ? Provenance::PaperExact : Provenance::PaperReconstructed;
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(),
              [](const FixtureInfo& a, const FixtureInfo& b) { return a.name < b.name; });
    return out;
}

namespace {

void check(std::vector<PropertyCheck>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
    out.push_back({name, ok, detail});
}

Label edge_label(const TemporalGraph& g, const VertexId& a, const VertexId& b) {
    auto key = g.directed ? std::make_pair(a, b) : canonical_pair(a, b);
    for (const auto& e : g.edges)
        if (e.tail == key.first && e.head == key.second) return e.labels.front();
    throw Error(Errc::UnknownVertex, "edge (" + a + "," + b + ") not in fixture");
}

std::vector<PropertyCheck> crab_checks(const Fixture& f) {
    std::vector<PropertyCheck> out;
    const auto& g = f.graph;
    const StaticGraph r = f.expected_r;
    auto L = [&](const VertexId& a, const VertexId& b) { return edge_label(g, a, b); };

    // chronological order of the labels, as forced in the proof
    std::vector<Label> others = {L("b", "a"),  L("c", "a"),  L("b", "l3"), L("c", "r3"),
                                 L("b", "l4"), L("c", "r4"), L("b", "c"),  L("b", "l6"),
                                 L("c", "r6")};
    bool ends_first = true;
    for (const auto& t : others)
        ends_first &= L("b", "l1") < t && L("c", "r1") < t;
    check(out, "l1/r1 edges come before all other labels", ends_first);

    bool a_before = true;
    const std::vector<std::pair<VertexId, VertexId>> arm_edges = {
        {"b", "l3"}, {"c", "r3"}, {"b", "l4"}, {"c", "r4"}, {"b", "l6"}, {"c", "r6"}};
    for (const auto& e : arm_edges)
        a_before &= L("b", "a") < L(e.first, e.second) && L("c", "a") < L(e.first, e.second);
    check(out, "a edges precede the arm and end edges", a_before);

    check(out, "l3 before l4 and r3 before r4",
          L("b", "l3") < L("b", "l4") && L("c", "r3") < L("c", "r4"));
    check(out, "bridge bc after both 4-arms",
          L("b", "l4") < L("b", "c") && L("c", "r4") < L("b", "c"));
    bool ends_last = true;
    for (const auto& t : {L("b", "a"), L("c", "a"), L("b", "l3"), L("c", "r3"), L("b", "l4"),
                          L("c", "r4"), L("b", "c"), L("b", "l1"), L("c", "r1")})
        ends_last &= L("b", "l6") > t && L("c", "r6") > t;
    check(out, "l6/r6 edges come after all other labels", ends_last);

    // reachability facts
    bool l1_all = true, r1_all = true;
    for (const auto& v : g.vertices) {
        if (v != "l1" && v != "r1") l1_all &= r.has_arc("l1", v);
        if (v != "r1" && v != "l1") r1_all &= r.has_arc("r1", v);
    }
    check(out, "l1 reaches everyone but r1", l1_all && !r.has_arc("l1", "r1"));
    check(out, "r1 reaches everyone but l1", r1_all && !r.has_arc("r1", "l1"));

    bool cross_blocked = true;
    for (const auto& [x, y] : std::vector<std::pair<VertexId, VertexId>>{
             {"l3", "r3"}, {"l3", "r4"}, {"l4", "r3"}, {"l4", "r4"}})
        cross_blocked &= !r.has_arc(x, y) && !r.has_arc(y, x);
    check(out, "no reachability between the 3/4 arms across sides", cross_blocked);

    check(out, "l3 reaches l4 but not conversely", r.has_arc("l3", "l4") && !r.has_arc("l4", "l3"));
    check(out, "r3 reaches r4 but not conversely", r.has_arc("r3", "r4") && !r.has_arc("r4", "r3"));

    bool ends_reached = true;
    for (const auto& v : g.vertices) {
        if (v != "l6") ends_reached &= v == "r6" || r.has_arc(v, "l6");
        if (v != "r6") ends_reached &= v == "l6" || r.has_arc(v, "r6");
    }
    check(out, "everyone reaches l6 and r6", ends_reached);

    bool a_reachers = true;
    for (const auto& v : g.vertices) {
        if (v == "a") continue;
        bool expected = v == "l1" || v == "r1" || v == "b" || v == "c";
        a_reachers &= r.has_arc(v, "a") == expected;
    }
    check(out, "only l1, r1, b, c reach a", a_reachers);
    check(out, "fixture is simple and undirected", is_simple(g) && !g.directed);
    return out;
}

std::vector<PropertyCheck> alien_checks(const Fixture& f) {
    std::vector<PropertyCheck> out;
    const StaticGraph& r = f.expected_r;
    const std::vector<std::string> centers = {"x", "y", "z"};

    bool centers_reach = true;
    for (const auto& i : centers)
        for (const auto& j : centers)
            centers_reach &= r.has_arc(i, "b" + j) && r.has_arc(i, "d" + j);
    check(out, "x,y,z reach every b_i and d_i", centers_reach);

    bool a_reach = true;
    for (const auto& i : centers) {
        for (const auto& j : centers) {
            a_reach &= r.has_arc("a" + i, j);
            a_reach &= r.has_arc("a" + i, "b" + j) && r.has_arc("a" + i, "d" + j);
        }
    }
    check(out, "every a_i reaches x,y,z and all b_j, d_j", a_reach);

    bool c_reach = true;
    for (const auto& i : centers)
        for (const auto& j : centers)
            c_reach &= r.has_arc("c" + i, j) && r.has_arc("c" + i, "d" + j) &&
                       !r.has_arc("c" + i, "b" + j);
    check(out, "every c_i reaches x,y,z and all d_j but no b_j", c_reach);

    // helper tokens are h_<alpha>_<beta>: alpha feeds the helper, the helper
    // feeds beta; the labels are chosen so the two-edge path is not temporal
    bool helpers_ok = true;
    std::string helper_detail;
    for (const auto& v : f.graph.vertices) {
        if (v.rfind("h_", 0) != 0) continue;
        auto p1 = v.find('_');
        auto p2 = v.find('_', p1 + 1);
        std::string alpha = v.substr(p1 + 1, p2 - p1 - 1);
        std::string beta = v.substr(p2 + 1);
        bool ok = r.has_arc(v, beta) && !r.has_arc(v, alpha) && r.has_arc(alpha, v) &&
                  !r.has_arc(alpha, beta) && r.has_arc(beta, alpha);
        if (!ok && helper_detail.empty()) helper_detail = "first failing helper: " + v;
        helpers_ok &= ok;
    }
    check(out, "each helper reaches beta not alpha; alpha reaches it but not beta; beta reaches alpha",
          helpers_ok, helper_detail);
    check(out, "fixture is simple and directed", is_simple(f.graph) && f.graph.directed);
    return out;
}

} // namespace

std::vector<PropertyCheck> fixture_property_checks(const Fixture& f) {
    std::vector<PropertyCheck> out;
    const StaticGraph& r = f.expected_r;
    if (f.name == "directed_triangle") {
        check(out, "strict reachability is exactly the three cycle arcs",
              r.arcs == std::vector<std::pair<VertexId, VertexId>>{{"a", "b"}, {"b", "c"}, {"c", "a"}});
        check(out, "non-strict reachability is complete",
              reachability_graph(f.graph, Semantics::NonStrict).arcs.size() == 6);
    } else if (f.name == "proper_four_cycle") {
        check(out, "graph is proper under both directed readings",
              is_proper(f.graph, Properness::Consecutive) && is_proper(f.graph, Properness::Classic));
        check(out, "exactly the two transitive arcs (a,c) and (b,d)",
              r.has_arc("a", "c") && r.has_arc("b", "d") && r.arcs.size() == 6);
        check(out, "strict and non-strict reachability agree",
              reachability_graph(f.graph, Semantics::Strict) ==
                  reachability_graph(f.graph, Semantics::NonStrict));
    } else if (f.name == "nonstrict_simple_triangle") {
        auto sup = enumerate_path_supports(f.graph, Semantics::NonStrict);
        check(out, "all six supports of the non-strict triangle are present", sup.size() == 6);
        check(out, "non-strict reachability is complete", r.arcs.size() == 6);
    } else if (f.name == "ud_strict_cycle4") {
        bool chords_absent = !r.has_arc("a", "c") && !r.has_arc("c", "a") &&
                             !r.has_arc("b", "d") && !r.has_arc("d", "b");
        check(out, "reachability is the bidirected cycle without chords",
              chords_absent && r.arcs.size() == 8);
    } else if (f.name == "crab") {
        return crab_checks(f);
    } else if (f.name == "alien") {
        return alien_checks(f);
    }
    return out;
}

} // namespace tempograph
