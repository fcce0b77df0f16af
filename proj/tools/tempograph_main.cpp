// Command-line front end: validation, reachability, the setting
// transformations, equivalence checks, bounded realizability and the
// fixture corpus. Exit codes: 0 success / equivalent / realizable,
// 1 negative verdict, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempograph/core.hpp"
#include "tempograph/dot.hpp"
#include "tempograph/equivalence.hpp"
#include "tempograph/json_io.hpp"
#include "tempograph/realize.hpp"
#include "tempograph/reachability.hpp"
#include "tempograph/transforms.hpp"

using namespace tempograph;
using nlohmann::json;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
    out << content;
}

json embedding_to_json(const Embedding& e) {
    json j = json::object();
    for (const auto& [from, to] : e.map) j[from] = to;
    return j;
}

json report_to_json(const TransformReport& r, const Embedding& e) {
    return json{{"method", r.method},
                {"inputEdges", r.input_edges},
                {"outputEdges", r.output_edges},
                {"inputLifetime", r.input_lifetime},
                {"outputLifetime", r.output_lifetime},
                {"proper", r.proper},
                {"simple", r.simple},
                {"embedding", embedding_to_json(e)}};
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["equivalent"] = v.equivalent;
    if (v.witness) {
        json w = json::object();
        for (const auto& [a, b] : *v.witness) w[a] = b;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    if (v.counterexample) {
        const auto& c = *v.counterexample;
        json cj;
        switch (c.kind) {
            case Counterexample::Kind::Support: cj["support"] = c.support; break;
            case Counterexample::Kind::Arc: cj["arc"] = {c.arc.first, c.arc.second}; break;
            case Counterexample::Kind::Structural: break;
        }
        cj["note"] = c.note;
        j["counterexample"] = std::move(cj);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

json realize_result_to_json(const RealizeResult& r) {
    json j;
    j["kind"] = realize_kind_name(r.kind);
    j["exploredStates"] = r.explored_states;
    j["footprintsTried"] = r.footprints_tried;
    j["note"] = r.note;
    j["witness"] = r.witness ? graph_to_json(*r.witness) : json(nullptr);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"temporal graph settings toolkit"};
    app.require_subcommand(1);

    std::string graph_path, other_path, dot_path, out_semantics = "strict";
    std::string semantics_a = "strict", semantics_b = "strict";
    std::string method, setting_text = "d.strict.multi", notion = "reach";
    std::string mode_text = "identity", fixture_root = default_fixture_root();
    std::string fixture_name, source_vertex;
    bool do_normalize = false, tilt = false, serial = false;
    RealizeBounds bounds = RealizeBounds::from_env();

    auto* validate = app.add_subcommand("validate", "parse, validate and normalize a graph");
    validate->add_option("graph", graph_path)->required();

    auto* reach = app.add_subcommand("reach", "compute the reachability graph");
    reach->add_option("graph", graph_path)->required();
    reach->add_option("--semantics", out_semantics)->check(CLI::IsMember({"strict", "nonstrict"}));
    reach->add_option("--source", source_vertex, "print earliest arrivals from one vertex");
    reach->add_option("--dot", dot_path, "also write DOT to this path");
    reach->add_flag("--serial", serial, "use the serial reference implementation");

    auto* transform = app.add_subcommand("transform", "apply a setting transformation");
    transform->add_option("graph", graph_path)->required();
    transform->add_option("--method", method)
        ->required()
        ->check(CLI::IsMember({"doubling", "support-dilation", "reachability-dilation",
                               "saturation", "semaphore", "to-happy"}));
    transform->add_option("--semantics", out_semantics)
        ->check(CLI::IsMember({"strict", "nonstrict"}));
    transform->add_option("--setting", setting_text, "source setting for to-happy");
    transform->add_flag("--tilt", tilt, "tilt opposing arcs when doubling");
    transform->add_flag("--normalize", do_normalize, "normalize output labels to 1..m");
    transform->add_option("--dot", dot_path, "also write DOT of the output graph");

    auto* equiv = app.add_subcommand("equiv", "decide an equivalence notion");
    equiv->add_option("graph_a", graph_path)->required();
    equiv->add_option("graph_b", other_path)->required();
    equiv->add_option("--notion", notion)
        ->check(CLI::IsMember({"support", "reach", "induced-reach"}));
    equiv->add_option("--semantics-a", semantics_a)->check(CLI::IsMember({"strict", "nonstrict"}));
    equiv->add_option("--semantics-b", semantics_b)->check(CLI::IsMember({"strict", "nonstrict"}));
    equiv->add_option("--mode", mode_text)->check(CLI::IsMember({"identity", "isomorphism"}));

    auto* realize_cmd = app.add_subcommand("realize", "bounded realizability search");
    realize_cmd->add_option("target", graph_path, "static digraph JSON")->required();
    realize_cmd->add_option("--setting", setting_text)->required();
    realize_cmd->add_option("--max-labels-per-edge", bounds.max_labels_per_edge);
    realize_cmd->add_option("--max-distinct-labels", bounds.max_distinct_labels);
    realize_cmd->add_option("--budget", bounds.node_budget);
    realize_cmd->add_flag("--serial", serial, "disable the parallel footprint shards");

    auto* corpus_cmd = app.add_subcommand("corpus", "fixture corpus");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->add_option("--root", fixture_root, "fixture directory");
    auto* corpus_list = corpus_cmd->add_subcommand("list", "list fixtures");
    auto* corpus_show = corpus_cmd->add_subcommand("show", "print one fixture");
    corpus_show->add_option("name", fixture_name)->required();
    auto* corpus_verify = corpus_cmd->add_subcommand("verify", "re-verify a separation claim");
    corpus_verify->add_option("name", fixture_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*validate) {
        TemporalGraph g = load_graph_file(graph_path);
        std::cout << graph_to_json(g).dump(2) << "\n";
        return 0;
    }
    if (*reach) {
        TemporalGraph g = load_graph_file(graph_path);
        Semantics s = parse_semantics(out_semantics);
        if (!source_vertex.empty()) {
            ArrivalMap am = earliest_arrival(g, source_vertex, s);
            json arrivals = json::object();
            for (const auto& [v, a] : am.arrivals) {
                if (a.kind == Arrival::Kind::Source) arrivals[v] = "source";
                else if (a.kind == Arrival::Kind::Unreached) arrivals[v] = nullptr;
                else arrivals[v] = label_to_json(a.at);
            }
            std::cout << json{{"source", am.source}, {"arrivals", arrivals}}.dump(2) << "\n";
            return 0;
        }
        StaticGraph r = serial ? reachability_graph_serial(g, s) : reachability_graph(g, s);
        if (!dot_path.empty()) write_file(dot_path, to_dot(r));
        std::cout << arcs_to_json(r).dump(2) << "\n";
        return 0;
    }
    if (*transform) {
        TemporalGraph g = load_graph_file(graph_path);
        TransformOutput out;
        if (method == "doubling") out = undirected_to_directed(g, tilt);
        else if (method == "support-dilation") out = support_dilation(g);
        else if (method == "reachability-dilation") out = reachability_dilation(g);
        else if (method == "saturation") out = saturate(g, parse_semantics(out_semantics));
        else if (method == "semaphore") out = semaphore(g);
        else out = to_happy(g, parse_setting(setting_text));
        if (do_normalize) out.graph = normalize_labels(out.graph);
        if (!dot_path.empty()) write_file(dot_path, to_dot(out.graph));
        std::cout << json{{"graph", graph_to_json(out.graph)},
                          {"report", report_to_json(out.report, out.embedding)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (*equiv) {
        TemporalGraph a = load_graph_file(graph_path);
        TemporalGraph b = load_graph_file(other_path);
        Semantics sa = parse_semantics(semantics_a), sb = parse_semantics(semantics_b);
        Verdict v;
        if (notion == "support") {
            v = support_equivalent(a, b, sa, sb);
        } else if (notion == "reach") {
            EquivMode m = mode_text == "identity" ? EquivMode::Identity : EquivMode::Isomorphism;
            v = reachability_equivalent(a, b, sa, sb, m);
        } else {
            v = induced_reachability_equivalent(a, b, sa, sb, Embedding::identity(a.vertices));
        }
        std::cout << verdict_to_json(v).dump(2) << "\n";
        return v.equivalent ? 0 : 1;
    }
    if (*realize_cmd) {
        StaticGraph target = load_static_file(graph_path);
        SettingClass setting = parse_setting(setting_text);
        auto t0 = std::chrono::steady_clock::now();
        RealizeResult r = realize(target, setting, bounds, !serial);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        json j = realize_result_to_json(r);
        j["target"] = static_to_json(target);
        j["setting"] = setting.str();
        j["bounds"] = {{"maxLabelsPerEdge", bounds.max_labels_per_edge},
                       {"maxDistinctLabels", bounds.max_distinct_labels},
                       {"budget", bounds.node_budget}};
        j["elapsedMs"] = ms;
        std::cout << j.dump(2) << "\n";
        return r.kind == RealizeKind::Realizable ? 0 : 1;
    }
    if (*corpus_list) {
        json out = json::array();
        for (const auto& info : list_fixtures(fixture_root)) {
            out.push_back({{"name", info.name},
                           {"memberOf", info.claim.member_of.str()},
                           {"separatesFrom", info.claim.separates_from.str()},
                           {"notion", info.claim.notion},
                           {"provenance", provenance_name(info.provenance)}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (*corpus_show) {
        Fixture f = get_fixture(fixture_name, fixture_root);
        std::cout << json{{"name", f.name},
                          {"semantics", semantics_name(f.semantics)},
                          {"provenance", provenance_name(f.provenance)},
                          {"graph", graph_to_json(f.graph)},
                          {"expectedR", static_to_json(f.expected_r)},
                          {"memberOf", f.claim.member_of.str()},
                          {"separatesFrom", f.claim.separates_from.str()},
                          {"notion", f.claim.notion},
                          {"notes", f.claim.notes}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (*corpus_verify) {
        SeparationReport rep = verify_separation(fixture_name, fixture_root);
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        json j = {{"fixture", rep.fixture},
                  {"setting", rep.setting},
                  {"status", rep.status},
                  {"checks", checks},
                  {"elapsedMs", rep.elapsed_ms},
                  {"verified", rep.verified()}};
        if (rep.result) j["result"] = realize_result_to_json(*rep.result);
        std::cout << j.dump(2) << "\n";
        return rep.verified() ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
