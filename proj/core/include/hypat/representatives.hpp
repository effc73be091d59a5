#pragma once

#include <variant>
#include <vector>

#include "hypat/hypergraph.hpp"

namespace hypat {

// r maps edge index (0-based) to a vertex of that edge.
struct RepresentativeSystem {
    std::vector<int> rep;
};

// Certificate that Hall's condition fails in the cloned instance: the edges in
// `edge_indices` jointly touch fewer than |edge_indices| clone vertices.
struct HallViolator {
    std::vector<int> edge_indices;
    long long neighborhood_size = 0;
};

using HallResult = std::variant<RepresentativeSystem, HallViolator>;

// A system of representatives r with r(e) in e and every vertex representing at
// most k edges, found as an injective matching on clone_hypergraph(h, k) and
// projected back. Succeeds whenever ed(h) <= k.
HallResult hall_representatives(const Hypergraph& h, int k);

struct MultigraphReduction {
    Multigraph g;              // same edge count; g.edges[i] = {r(e_i), j} inside e_i
    RepresentativeSystem reps; // reps.rep[i] = r(e_i)
};

// Lemma-style reduction of a hypergraph of density <= k to a multigraph of density
// <= k with f_i inside e_i. The density precondition is verified with
// edge_density_exact when n <= 24, otherwise `trusted_density` must be set.
MultigraphReduction multigraph_reduction(const Hypergraph& h, int k, bool trusted_density = false);

} // namespace hypat
