#ifndef TEMPOGRAPH_DOT_HPP
#define TEMPOGRAPH_DOT_HPP

#include <string>

#include "tempograph/core.hpp"

namespace tempograph {

// Graphviz exports. Output is deterministic: vertices and edges in sorted
// order, one statement per line.
std::string to_dot(const StaticGraph& s, const std::string& name = "G");
std::string to_dot(const TemporalGraph& g, const std::string& name = "G");

} // namespace tempograph

#endif
