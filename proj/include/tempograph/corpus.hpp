#ifndef TEMPOGRAPH_CORPUS_HPP
#define TEMPOGRAPH_CORPUS_HPP

#include <string>
#include <vector>

#include "tempograph/core.hpp"
#include "tempograph/reachability.hpp"

namespace tempograph {

enum class Provenance { PaperExact, PaperReconstructed };

const char* provenance_name(Provenance p);

struct FixtureClaim {
    SettingClass member_of;      // setting the witness graph belongs to
    SettingClass separates_from; // setting claimed to admit no equivalent graph
    std::string notion;          // "reachability" | "support"
    std::string notes;
};

// A named witness graph with its expected reachability graph and the
// separation it certifies. Loaded from fixtures/<name>/{graph.json,
// expected_r.json, claim.json}; the stored expected reachability graph is
// re-verified against a fresh computation at load time.
struct Fixture {
    std::string name;
    TemporalGraph graph;
    Semantics semantics = Semantics::Strict;
    StaticGraph expected_r;
    FixtureClaim claim;
    Provenance provenance = Provenance::PaperExact;
};

struct FixtureInfo {
    std::string name;
    FixtureClaim claim;
    Provenance provenance;
};

struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Resolution order: explicit argument, TEMPOGRAPH_FIXTURES env var, then
// "fixtures" relative to the working directory.
std::string default_fixture_root();

Fixture get_fixture(const std::string& name, const std::string& root = default_fixture_root());
std::vector<FixtureInfo> list_fixtures(const std::string& root = default_fixture_root());

// Structural facts each fixture must satisfy, taken from the construction
// it encodes (for the large fixtures these stand in for the out-of-reach
// exhaustive search).
std::vector<PropertyCheck> fixture_property_checks(const Fixture& f);

} // namespace tempograph

#endif
