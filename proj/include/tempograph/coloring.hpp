#ifndef TEMPOGRAPH_COLORING_HPP
#define TEMPOGRAPH_COLORING_HPP

#include <map>

#include "tempograph/core.hpp"

namespace tempograph {

// Proper edge coloring: edges sharing any endpoint receive distinct colors.
// Colors start at 1 so that every tilt c(e)*eps is nonzero. The greedy
// bound is 2*maxdeg - 1 colors.
struct ColorMap {
    std::map<std::pair<VertexId, VertexId>, int> color; // keyed by arc as stored
    int max_color = 0;

    int at(const VertexId& u, const VertexId& v) const { return color.at({u, v}); }
};

ColorMap greedy_edge_coloring(const StaticGraph& s);

// Epsilon for tilted labels: small enough that base + c*eps stays within
// the unit gap below the next base label for every color c <= max_color.
Rat tilt_epsilon(int max_color);

} // namespace tempograph

#endif
