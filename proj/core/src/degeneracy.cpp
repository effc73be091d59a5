#include <algorithm>

#include "hypat/hypergraph.hpp"

namespace hypat {

DegeneracyReport degeneracy(const Hypergraph& h) {
    h.validate();
    const int n = h.n;
    const auto& edges = h.edges;

    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (int v : edges[i]) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));

    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> dead_members(edges.size(), 0); // removed vertices per edge
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (int v : edges[i]) ++degree[static_cast<std::size_t>(v)];

    DegeneracyReport rep;
    rep.order.reserve(static_cast<std::size_t>(n));
    rep.per_step_degrees.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 1; v <= n; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (pick < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)])
                pick = v;
        }
        rep.order.push_back(pick);
        rep.per_step_degrees.push_back(degree[static_cast<std::size_t>(pick)]);
        rep.value = std::max(rep.value, degree[static_cast<std::size_t>(pick)]);
        removed[static_cast<std::size_t>(pick)] = 1;
        for (int ei : incident[static_cast<std::size_t>(pick)]) {
            if (dead_members[static_cast<std::size_t>(ei)]++ == 0) {
                // edge just left the surviving subhypergraph
                for (int u : edges[static_cast<std::size_t>(ei)])
                    if (!removed[static_cast<std::size_t>(u)]) --degree[static_cast<std::size_t>(u)];
            }
        }
    }
    return rep;
}

} // namespace hypat
