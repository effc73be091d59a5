#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <hypat/hypergraph.hpp>
#include <hypat/polynomial.hpp>
#include <hypat/representatives.hpp>

namespace hypat {

// Certificate monomial read off a peel order: each edge contributes the vertex
// of it that is removed first. Exactly one selection of vertices realizes that
// exponent vector, so the coefficient is the product of the matching bracket
// coefficients and cannot vanish. Its max exponent is at most the degeneracy.
ATCertificate degeneracy_certificate(const LinearSystem& sys);

struct PeelCertificate {
    ATCertificate certificate;
    std::vector<int> chosen;  // per edge, its earliest-removed vertex
    DegeneracyReport peel;
};
PeelCertificate degeneracy_certificate_detail(const LinearSystem& sys);

// Given f(a) != f(b) and g(c) != g(d) on a 4-element multiset, returns a pair
// (x, y) with f(x) != f(y) and g(x) != g(y). Scans ab, cd, ac, ad, bc, bd in
// that order; such a pair always exists when the hypotheses hold.
std::pair<int, int> claim1_pair(const std::function<Scalar(int)>& f,
                                const std::function<Scalar(int)>& g, int a, int b, int c,
                                int d);

struct SearchResult {
    PermutationAssignment perms;
    ATCertificate certificate;
};

// Greedy per-edge coefficient permutation search. `order` lists the vertices
// from earliest to latest; every edge's representative must come strictly
// before the edge's latest vertex in that order. The returned certificate
// monomial multiplies one x_{r(e)} per edge; its coefficient in the permuted
// system is nonzero. Requires a fully unbalanced system.
SearchResult permutation_search(const LinearSystem& sys, const RepresentativeSystem& r,
                                const std::vector<int>& order);

struct MainResult {
    PermutationAssignment perms;
    ATCertificate certificate;
    int bound = 1;     // 2 * capacity + 1
    int capacity = 0;  // ceil of the edge density
    MultigraphReduction reduction;
    DegeneracyReport peel;  // peel order of the reduced multigraph
};

// Full pipeline: capacity k = ceil(density), reduce to a multigraph of pair
// edges, peel it, take each pair's earlier endpoint as representative, then run
// permutation_search. The certificate's max exponent is at most 2k, so the
// permuted system has Alon-Tarsi number at most 2k + 1.
MainResult theorem_main(const LinearSystem& sys);

// For the all-ones system the Alon-Tarsi number is exactly ceil(density) + 1
// over a characteristic-zero field. Returns a certificate built from a
// representative system at that capacity; rejects prime fields, where the
// statement can fail.
ATCertificate fully_balanced_at(const Hypergraph& h, const FieldDescriptor& field);

// Writes x_u - x_w as a weighted sum of coefficient-permuted copies of one
// bracket: two terms when the endpoint coefficients differ, four when they
// coincide and a third vertex with a different coefficient exists.
struct SpanDecomposition {
    int edge = -1;
    // Each permutation is the identity outside the decomposed edge.
    std::vector<std::pair<PermutationAssignment, Scalar>> terms;
};
SpanDecomposition difference_decomposition(const LinearSystem& sys, int edge, int u, int w);

struct SpanRouteResult {
    PermutationAssignment perms;
    ATCertificate certificate;
    int bound = 1;
    int capacity = 0;
};

// Independent realization of the same bound: form the product of endpoint
// differences over the reduced multigraph, take its peel certificate monomial,
// and search the per-edge difference decompositions for a permuted system with
// a nonzero coefficient there. One must exist because the weighted sum of all
// combinations reproduces that product.
SpanRouteResult span_route(const LinearSystem& sys);

}  // namespace hypat
