#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypat/hypergraph.hpp"
#include "hypat/scalar.hpp"

namespace hypat {

// Sparse exponent vector: sorted (vertex, exponent > 0) pairs.
class Monomial {
public:
    Monomial() = default;
    static Monomial from_pairs(std::vector<std::pair<int, int>> pairs);
    static Monomial from_dense(const std::vector<int>& exps); // exps[i] is x_{i+1}'s exponent

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int exponent(int v) const;
    int max_exponent() const;
    long long total_degree() const;
    bool empty() const { return pairs_.empty(); }

    Monomial times(int v) const;                    // multiply by x_v
    std::optional<Monomial> divided_by(int v) const; // nullopt if x_v absent

    bool operator==(const Monomial& o) const { return pairs_ == o.pairs_; }
    // Ascending comparison of the dense exponent tuples (alpha_1, alpha_2, ...).
    static bool lex_less(const Monomial& a, const Monomial& b);

    std::string to_string() const; // "x1^2*x3", "1" for the empty monomial

private:
    std::vector<std::pair<int, int>> pairs_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// Product of per-edge linear forms: bracket i is sum over edge i's vertices v of
// coeffs[i][pos(v)] * x_v, every coefficient nonzero.
struct LinearSystem {
    Hypergraph hypergraph;
    FieldDescriptor field = FieldDescriptor::rational();
    std::vector<std::vector<Scalar>> coeffs; // aligned with each edge's vertex list

    void validate() const;
    Scalar coeff(int edge_idx, int vertex) const;
    int vertex_position(int edge_idx, int vertex) const; // -1 if absent
};

LinearSystem all_ones_system(const Hypergraph& h, const FieldDescriptor& f);

// Text format: "field <descriptor>" line, hypergraph inline, then per edge a line
// "coeffs s1 | s2 | ... | sk" aligned with the edge's sorted vertex list.
LinearSystem parse_linear_system(std::istream& in);
LinearSystem parse_linear_system(const std::string& text);
std::string format_linear_system(const LinearSystem& sys);

struct SparsePoly {
    FieldDescriptor field = FieldDescriptor::rational();
    std::unordered_map<Monomial, Scalar, MonomialHash> terms; // all coefficients nonzero

    void add_term(const Monomial& m, const Scalar& c); // erases terms that cancel
};

inline constexpr std::size_t kDefaultTermBudget = 5'000'000;

// Edge-by-edge product. With a cap, any partial monomial reaching exponent >= cap is
// discarded, so the result is exactly the full expansion filtered to terms with all
// exponents < cap. Throws budget_error if intermediate term counts exceed the budget.
SparsePoly expand_truncated(const LinearSystem& sys, std::optional<int> cap,
                            std::size_t term_budget = kDefaultTermBudget);

// Expansion keeping only terms with exponent(v) <= caps[v] for every vertex
// (caps is 1-based, caps[0] unused).
SparsePoly expand_variable_capped(const LinearSystem& sys, const std::vector<int>& caps,
                                  std::size_t term_budget = kDefaultTermBudget);

// Exact expansion coefficient of the target monomial, by dynamic programming over
// the brackets keeping only partial monomials dominated by the target.
Scalar coefficient_of(const LinearSystem& sys, const Monomial& target);

struct ATCertificate {
    Monomial exponents;
    Scalar coefficient;
    int at_value = 1; // max exponent + 1

    std::string to_string() const;
};

// Iterative-cap search: the first cap k with surviving terms yields AT = k; the
// certificate is the lex-smallest surviving exponent vector.
ATCertificate alon_tarsi_number(const LinearSystem& sys,
                                std::size_t term_budget = kDefaultTermBudget);

// Per edge, a bijection of that edge's vertex set; coefficient of x_v becomes
// a_{e, sigma(v)}. Stored via edge-local positions: local[i][j] is the position
// whose coefficient moves onto the vertex at position j.
struct PermutationAssignment {
    std::vector<std::vector<int>> local;

    static PermutationAssignment identity(const LinearSystem& sys);
    void apply_transposition(int edge_idx, int pos_a, int pos_b);
    // Cycle notation on vertex labels, e.g. "(2 3)" or "id", one string per edge.
    std::string edge_cycles(const LinearSystem& sys, int edge_idx) const;
};

LinearSystem apply_permutations(const LinearSystem& sys, const PermutationAssignment& perms);

struct UnbalancedReport {
    bool fully_unbalanced = false;
    // For each edge, a witness pair of vertices with distinct coefficients
    // (nullopt when the edge is balanced).
    std::vector<std::optional<std::pair<int, int>>> witnesses;
};

UnbalancedReport fully_unbalanced_check(const LinearSystem& sys);

// point is 1-based (point[0] unused) and must cover all vertices of all edges.
Scalar evaluate(const LinearSystem& sys, const std::vector<Scalar>& point);

} // namespace hypat
