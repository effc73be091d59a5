#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypat/graph.hpp"
#include "hypat/hypergraph.hpp"
#include "hypat/polynomial.hpp"

namespace hypat {

// colors[v] for v = 1..n (colors[0] unused). Proper means no edge is monochromatic.
struct Coloring {
    std::vector<int> colors;

    int color(int v) const { return colors[static_cast<std::size_t>(v)]; }
    bool proper(const Hypergraph& h) const;
};

struct ChromaticReport {
    std::optional<int> value; // nullopt: every palette of size <= max_colors fails
    Coloring coloring;        // witness when value is set
};

// Exact chromatic number by backtracking (first-fit palette growth); n <= 20.
ChromaticReport chromatic_number(const Hypergraph& h, int max_colors);

// Per edge of size k: coefficient +1 on every vertex but the largest and -(k-1)
// on the largest. Built over Cyclotomic(s) so the brackets can be evaluated on
// s-th roots of unity directly; a bracket vanishes on such a point exactly when
// the edge is monochromatic.
LinearSystem unbalanced_linear_system(const Hypergraph& h, unsigned s);

// Backtracking search for a point of U_s^n (s-th roots of unity) with nonzero
// system value, pruning as soon as a completed bracket vanishes. The returned
// colors are the exponents 0..s-1. Accepts systems over Cyclotomic(s); rational
// systems are embedded first.
std::optional<Coloring> cn_coloring(const LinearSystem& sys, unsigned s);

struct ListColorReport {
    bool colorable = false;
    Coloring coloring; // witness when colorable
};

// lists is 1-based (lists[0] unused); every vertex picks from its own list.
ListColorReport list_colorable(const Hypergraph& h, const std::vector<std::vector<int>>& lists);

// True iff every edge's coefficients sum to zero, so the system vanishes on
// every point that makes some edge monochromatic.
bool is_coloring_polynomial(const LinearSystem& sys);

// Exact decision of the token game: Painter wins iff for every nonempty reveal
// set X there is an independent X' inside it whose removal leaves a winning
// state with one token burned on X \ X'. f is 1-based (f[0] unused); n <= 7.
bool f_paintable(const Hypergraph& h, const std::vector<int>& f);

// Stateful Painter driven by a nonzero coefficient of a coloring polynomial:
// the residual system always keeps a nonzero monomial inside the remaining
// per-vertex budgets, which pins down a legal reply to every reveal.
class PainterStrategy {
public:
    PainterStrategy(const LinearSystem& sys, const Monomial& alpha);

    bool finished() const { return uncolored_.empty(); }
    const std::vector<int>& uncolored() const { return uncolored_; }
    int budget(int v) const { return budget_[static_cast<std::size_t>(v)]; }
    const LinearSystem& residual() const { return residual_; }

    // Lister reveals a nonempty set of uncolored vertices; returns the
    // independent subset committed to the revealed color. Throws internal_error
    // if no subset qualifies (impossible while the invariant holds).
    std::vector<int> move(const std::vector<int>& lister_set);

    // One line per round: "round R | lister ... | painter ... | tokens v=k ...".
    const std::vector<std::string>& transcript() const { return transcript_; }

private:
    bool viable(const LinearSystem& candidate, const std::vector<int>& caps) const;

    LinearSystem residual_;
    std::vector<int> uncolored_;  // sorted
    std::vector<int> budget_;     // 1-based, -1 on colored vertices
    std::vector<std::string> transcript_;
    int round_ = 0;
};

PainterStrategy painter_from_certificate(const LinearSystem& sys, const Monomial& alpha);

// Terminal test of the weighting game: compare incident-weight sums across edges
// only, or across every vertex pair.
enum class SumScope { AdjacentOnly, AllPairs };

struct UnbalanceableConfig {
    SumScope scope = SumScope::AdjacentOnly;
    std::size_t memo_budget = 4'000'000;
};

// Exact recursion on the weighting game with a finite pool: each round Lister
// names a reveal set X of unweighted edges and a pool value a (consumed), and
// Painter fixes weight a on some X' inside X, burning a token on X \ X'. The
// state wins when the pool is nonempty, no unweighted edge is out of tokens,
// and a fully weighted graph separates the selected sums. w0 and f are 0-based
// per edge (f ignored on weighted edges); |E| <= 5.
bool unbalanceable_game(const SimpleGraph& g, const std::vector<std::optional<Scalar>>& w0,
                        const std::vector<int>& f, const std::vector<Scalar>& pool,
                        const UnbalanceableConfig& cfg = {});

} // namespace hypat
