#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypat {

// Vertices are 1..n. Edges are strictly increasing vertex lists of size >= 2;
// duplicate edges are allowed (multihypergraph). A multigraph is the 2-uniform case.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;

    void validate() const; // throws std::invalid_argument on malformed data
    int max_edge_size() const;
};

using Multigraph = Hypergraph;

// Text format: "n m" then m lines "k v1 ... vk" (1-based, strictly increasing, k >= 2).
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string format_hypergraph(const Hypergraph& h);

// Indices (0-based, input order) of edges fully contained in X.
std::vector<int> induced_edges(const Hypergraph& h, const std::vector<int>& x);

struct DensityReport {
    mpq_class density;
    std::vector<int> witness; // nonempty, sorted; ties: smallest cardinality, then lex
};

// Brute force over all nonempty subsets; requires n <= 24.
DensityReport edge_density_exact(const Hypergraph& h);
// Dinkelbach iteration over exact-rational max-flow; same result contract,
// including the witness tie-break.
DensityReport edge_density_flow(const Hypergraph& h);

mpz_class ceil_rational(const mpq_class& q);

struct DegeneracyReport {
    int value = 0;
    std::vector<int> order;             // removal order, first removed first
    std::vector<int> per_step_degrees;  // degree in the surviving subhypergraph at removal
};

// Peeling: repeatedly remove a minimum-degree vertex (lowest index on ties), where
// degree counts edges fully contained in the surviving vertex set.
DegeneracyReport degeneracy(const Hypergraph& h);

struct CloneResult {
    Hypergraph clone; // vertex (v, c) flattened to (v-1)*k + c, c in 1..k
    int k = 1;

    int to_clone(int v, int c) const { return (v - 1) * k + c; }
    int to_base(int clone_vertex) const { return (clone_vertex - 1) / k + 1; }
    int clone_slot(int clone_vertex) const { return (clone_vertex - 1) % k + 1; }
};

// H' on V x [k] with edges e x [k].
CloneResult clone_hypergraph(const Hypergraph& h, int k);

} // namespace hypat
