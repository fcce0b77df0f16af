#include "tempograph/coloring.hpp"

#include <algorithm>
#include <set>

namespace tempograph {

ColorMap greedy_edge_coloring(const StaticGraph& s) {
    ColorMap cm;
    // arcs are already sorted; greedy in that order is deterministic
    std::map<VertexId, std::set<int>> used_at;
    for (const auto& arc : s.arcs) {
        const auto& [u, v] = arc;
        int c = 1;
        while (used_at[u].count(c) || used_at[v].count(c)) ++c;
        cm.color[arc] = c;
        used_at[u].insert(c);
        used_at[v].insert(c);
        cm.max_color = std::max(cm.max_color, c);
    }
    return cm;
}

Rat tilt_epsilon(int max_color) {
    return Rat(1, 4 * std::max(max_color, 1));
}

} // namespace tempograph
