#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hypat/graph.hpp"
#include "hypat/hypergraph.hpp"
#include "hypat/polynomial.hpp"
#include "hypat/representatives.hpp"

namespace hypat {

// A 2-pendant is a degree-1 vertex u, its degree-2 neighbor v, and the edge
// attaching v to a third vertex w; removing u and v deletes both edges.
struct PendantRecord {
    struct Step {
        int u = 0;
        int v = 0;
        int w = 0;
    };
    std::vector<Step> removed; // in removal order
};

enum class PeelVerdict { EndsNotK2, EndsK2 };

struct PeelResult {
    SimpleGraph reduced;
    PendantRecord record;
    PeelVerdict verdict = PeelVerdict::EndsNotK2;
};

// Removes 2-pendants until none remain. Ends at a single edge exactly when the
// input is a tree with a perfect matching. Vertex labels are preserved; removed
// vertices keep their numbers but lose all edges.
PeelResult two_pendant_peel(const SimpleGraph& g);

// Hypergraph on the edge indices of g (vertex i+1 is edge i): for each edge
// e = uv one hyperedge holding every edge meeting u or v other than e itself.
// Throws if some hyperedge would have fewer than two members (a 2-pendant or an
// isolated edge; peel first).
Hypergraph neighborhood_hypergraph(const SimpleGraph& g);

// A bijection of the edge set with |e ∩ f(e)| = 1 for every e, found by perfect
// matching on the edge-versus-edge adjacency. map[i] is the 0-based partner of
// edge i. Fails with a Hall violator (a set of edges whose joint line-graph
// neighborhood is smaller than itself).
using EdgeBijection = std::variant<std::vector<int>, HallViolator>;
EdgeBijection edge_bijection(const SimpleGraph& g);

// Product over edges uv (u < v) of (sum of x_e over edges at u except uv)
// minus (sum over edges at v except uv); variables are edge indices + 1.
// Vanishes at a weighting exactly when two adjacent vertices share their
// incident-weight sums. Throws if some bracket has fewer than two variables
// (isolated edges, K_2, 2-pendants; peel first).
LinearSystem coloring_polynomial_pG(const SimpleGraph& g);

// The value of the same product at a concrete weighting, computed straight
// from vertex sums; defined for every graph (K_2 gives the zero value).
Scalar pg_value(const SimpleGraph& g, const std::vector<Scalar>& edge_weights);

struct EdgeDensityWitness {
    bool holds = false;
    std::vector<int> h_of; // h_of[i]: hyperedge index assigned to edge i, e_i inside it
};

// Verifies ed(H(G)) <= 1 and exhibits the bijection h with e in h(e) built from
// the edge bijection composed with the edge-to-hyperedge correspondence.
// Requires a connected input that survives the peel test.
EdgeDensityWitness check_ed_HG(const SimpleGraph& g);

// Exhaustive/backtracking search for a weighting with all adjacent sums
// distinct; weights drawn from the given set. none when no weighting works.
std::optional<std::vector<int>> find_123_weighting(const SimpleGraph& g,
                                                   const std::vector<int>& weights);

} // namespace hypat
