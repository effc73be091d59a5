#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <hypat/pipeline.hpp>

#include "oracles.hpp"

using hypat::FieldDescriptor;
using hypat::Hypergraph;
using hypat::LinearSystem;
using hypat::Monomial;
using hypat::Scalar;

namespace {

LinearSystem rational_system(const std::string& hg, std::vector<std::vector<int>> rows) {
    LinearSystem sys;
    sys.hypergraph = hypat::parse_hypergraph(hg);
    sys.field = FieldDescriptor::rational();
    for (auto& row : rows) {
        std::vector<Scalar> r;
        for (int v : row) r.push_back(Scalar::from_integer(v, sys.field));
        sys.coeffs.push_back(std::move(r));
    }
    sys.validate();
    return sys;
}

// (x1 + w x2 + w^2 x3)(x1 + w x2 + w^2 x4)(w x1 + x3 + w^2 x4)(x2 + w x3 + w^2 x4)
LinearSystem tetra_system() {
    auto f = FieldDescriptor::cyclotomic(3);
    Scalar one = Scalar::one(f);
    Scalar w = Scalar::root_of_unity(3, 1);
    Scalar w2 = Scalar::root_of_unity(3, 2);
    LinearSystem sys;
    sys.hypergraph = hypat::parse_hypergraph("4 4\n3 1 2 3\n3 1 2 4\n3 1 3 4\n3 2 3 4\n");
    sys.field = f;
    sys.coeffs = {{one, w, w2}, {one, w, w2}, {w, one, w2}, {one, w, w2}};
    sys.validate();
    return sys;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int max_n, int max_m, int max_k) {
    std::uniform_int_distribution<int> nd(2, max_n);
    Hypergraph h;
    h.n = nd(rng);
    std::uniform_int_distribution<int> md(1, max_m);
    int m = md(rng);
    std::uniform_int_distribution<int> kd(2, std::min(max_k, h.n));
    std::uniform_int_distribution<int> vd(1, h.n);
    for (int i = 0; i < m; ++i) {
        int k = kd(rng);
        std::set<int> verts;
        while (static_cast<int>(verts.size()) < k) verts.insert(vd(rng));
        h.edges.emplace_back(verts.begin(), verts.end());
    }
    h.validate();
    return h;
}

// Every bracket gets pairwise distinct coefficients.
LinearSystem random_unbalanced_system(std::mt19937_64& rng, int max_n, int max_m, int max_k) {
    LinearSystem sys;
    sys.hypergraph = random_hypergraph(rng, max_n, max_m, max_k);
    sys.field = FieldDescriptor::rational();
    std::vector<int> pool = {1, -1, 2, -2, 3, -3, 4, -4};
    for (const auto& e : sys.hypergraph.edges) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Scalar> row;
        for (std::size_t j = 0; j < e.size(); ++j)
            row.push_back(Scalar::from_integer(pool[j], sys.field));
        sys.coeffs.push_back(std::move(row));
    }
    sys.validate();
    return sys;
}

// Coefficients drawn with repetition, so edges often carry equal pairs; rows
// that come out all-equal get one entry bumped to stay fully unbalanced.
LinearSystem random_lumpy_system(std::mt19937_64& rng, int max_n, int max_m, int max_k) {
    LinearSystem sys;
    sys.hypergraph = random_hypergraph(rng, max_n, max_m, max_k);
    sys.field = FieldDescriptor::rational();
    std::vector<int> pool = {1, 1, 1, -1, 2, -2};
    std::uniform_int_distribution<std::size_t> pd(0, pool.size() - 1);
    for (const auto& e : sys.hypergraph.edges) {
        std::vector<Scalar> row;
        for (std::size_t j = 0; j < e.size(); ++j)
            row.push_back(Scalar::from_integer(pool[pd(rng)], sys.field));
        bool all_equal = true;
        for (const auto& c : row) all_equal = all_equal && c == row[0];
        if (all_equal) row.back() = row.back() + Scalar::one(sys.field);
        if (row.back().is_zero()) row.back() = Scalar::from_integer(3, sys.field);
        sys.coeffs.push_back(std::move(row));
    }
    sys.validate();
    return sys;
}

// One permuted bracket of one edge as a degree-one polynomial.
hypat::SparsePoly bracket_poly(const LinearSystem& sys, int edge,
                               const std::vector<int>& sigma, const Scalar& scale) {
    hypat::SparsePoly p;
    p.field = sys.field;
    const auto& e = sys.hypergraph.edges[static_cast<std::size_t>(edge)];
    for (std::size_t j = 0; j < e.size(); ++j)
        p.add_term(Monomial::from_pairs({{e[j], 1}}),
                   scale * sys.coeffs[static_cast<std::size_t>(edge)]
                                     [static_cast<std::size_t>(sigma[j])]);
    return p;
}

// Weighted sum of the decomposition's permuted brackets.
hypat::SparsePoly recombine(const LinearSystem& sys, const hypat::SpanDecomposition& dec) {
    hypat::SparsePoly acc;
    acc.field = sys.field;
    for (const auto& [perm, weight] : dec.terms) {
        auto part = bracket_poly(sys, dec.edge, perm.local[static_cast<std::size_t>(dec.edge)],
                                 weight);
        for (const auto& [m, c] : part.terms) acc.add_term(m, c);
    }
    return acc;
}

hypat::SparsePoly difference_poly(const FieldDescriptor& f, int u, int w) {
    hypat::SparsePoly p;
    p.field = f;
    p.add_term(Monomial::from_pairs({{u, 1}}), Scalar::one(f));
    p.add_term(Monomial::from_pairs({{w, 1}}), Scalar::from_integer(-1, f));
    return p;
}

bool same_poly(const hypat::SparsePoly& a, const hypat::SparsePoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (const auto& [m, c] : a.terms) {
        auto it = b.terms.find(m);
        if (it == b.terms.end() || !(it->second == c)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("peel certificate on small instances") {
    // Single edge: vertex 1 is peeled first, so it is the edge's contribution.
    auto single = rational_system("2 1\n2 1 2\n", {{3, 5}});
    auto cert = hypat::degeneracy_certificate(single);
    CHECK(cert.exponents == Monomial::from_dense({1, 0}));
    CHECK(cert.coefficient == Scalar::from_integer(3, single.field));
    CHECK(cert.at_value == 2);

    // Path 1-2-3: vertex 1 goes first (killing {1,2}), then vertex 2.
    auto path = rational_system("3 2\n2 1 2\n2 2 3\n", {{3, 5}, {7, 11}});
    auto pcert = hypat::degeneracy_certificate(path);
    CHECK(pcert.exponents == Monomial::from_dense({1, 1, 0}));
    CHECK(pcert.coefficient == Scalar::from_integer(21, path.field));
    CHECK(pcert.at_value == 2);

    // Star: leaves 2 and 3 go first; then the tie at degree one removes the
    // center before leaf 4, so the last edge contributes x1.
    auto star = rational_system("4 3\n2 1 2\n2 1 3\n2 1 4\n", {{1, 2}, {1, 2}, {1, 2}});
    auto scert = hypat::degeneracy_certificate(star);
    CHECK(scert.exponents == Monomial::from_dense({1, 1, 1, 0}));
    CHECK(scert.coefficient == Scalar::from_integer(4, star.field));
    CHECK(scert.at_value == 2);
    CHECK(hypat::degeneracy(star.hypergraph).value == 1);
}

TEST_CASE("peel certificate is confirmed by direct coefficients") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 60; ++trial) {
        auto sys = random_unbalanced_system(rng, 7, 8, 4);
        auto detail = hypat::degeneracy_certificate_detail(sys);
        const auto& cert = detail.certificate;
        CHECK(cert.at_value <= detail.peel.value + 1);
        CHECK(hypat::coefficient_of(sys, cert.exponents) == cert.coefficient);
        CHECK_FALSE(cert.coefficient.is_zero());
        // chosen vertices genuinely realize the exponent vector
        Monomial rebuilt;
        for (int v : detail.chosen) rebuilt = rebuilt.times(v);
        CHECK(rebuilt == cert.exponents);
    }
}

TEST_CASE("alon tarsi vs degeneracy vs density chain") {
    std::mt19937_64 rng(1123);
    for (int trial = 0; trial < 40; ++trial) {
        auto sys = random_unbalanced_system(rng, 6, 6, 3);
        auto at = hypat::alon_tarsi_number(sys, hypat::kDefaultTermBudget);
        auto deg = hypat::degeneracy(sys.hypergraph);
        auto den = hypat::edge_density_exact(sys.hypergraph);
        int maxe = sys.hypergraph.max_edge_size();
        CHECK(at.at_value - 1 <= deg.value);
        CHECK(mpq_class(deg.value) <= den.density * maxe);
        CHECK(den.density * maxe <= mpq_class((at.at_value - 1) * maxe));
    }
}

TEST_CASE("pair selection under two constraints") {
    auto table = [](std::initializer_list<std::pair<int, Scalar>> vals) {
        std::vector<std::pair<int, Scalar>> v(vals);
        return std::function<Scalar(int)>([v](int x) {
            for (const auto& [key, s] : v)
                if (key == x) return s;
            throw std::logic_error("unknown element");
        });
    };
    auto q = FieldDescriptor::rational();
    auto s = [&](int v) { return Scalar::from_integer(v, q); };

    // Same pair witnesses both maps.
    auto f = table({{1, s(1)}, {2, s(2)}});
    auto g = table({{1, s(5)}, {2, s(6)}});
    CHECK(hypat::claim1_pair(f, g, 1, 2, 1, 2) == std::pair<int, int>(1, 2));

    // f separates (a, b) only, g separates (c, d) only -> a cross pair.
    auto f2 = table({{1, s(0)}, {2, s(1)}, {3, s(0)}, {4, s(1)}});
    auto g2 = table({{1, s(7)}, {2, s(7)}, {3, s(7)}, {4, s(8)}});
    auto got = hypat::claim1_pair(f2, g2, 1, 2, 3, 4);
    CHECK(f2(got.first) != f2(got.second));
    CHECK(g2(got.first) != g2(got.second));

    // Hypothesis violations are rejected.
    CHECK_THROWS_AS(hypat::claim1_pair(f2, g2, 1, 3, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypat::claim1_pair(f2, g2, 1, 2, 1, 2), std::invalid_argument);
}

TEST_CASE("pair selection random property") {
    std::mt19937_64 rng(555);
    auto q = FieldDescriptor::rational();
    std::uniform_int_distribution<int> vd(0, 2);
    std::uniform_int_distribution<int> ed(1, 4);
    for (int trial = 0; trial < 400; ++trial) {
        // values on elements 1..4, possibly with repeated elements in the multiset
        std::vector<Scalar> fv(5), gv(5);
        for (int i = 1; i <= 4; ++i) {
            fv[i] = Scalar::from_integer(vd(rng), q);
            gv[i] = Scalar::from_integer(vd(rng), q);
        }
        int a = ed(rng), b = ed(rng), c = ed(rng), d = ed(rng);
        if (fv[a] == fv[b] || gv[c] == gv[d]) continue;
        auto f = std::function<Scalar(int)>([&](int x) { return fv[x]; });
        auto g = std::function<Scalar(int)>([&](int x) { return gv[x]; });
        auto [x, y] = hypat::claim1_pair(f, g, a, b, c, d);
        CHECK(fv[x] != fv[y]);
        CHECK(gv[x] != gv[y]);
    }
}

TEST_CASE("permutation search base case") {
    auto sys = rational_system("2 1\n2 1 2\n", {{2, 1}});
    hypat::RepresentativeSystem r{{1}};
    auto res = hypat::permutation_search(sys, r, {1, 2});
    CHECK(res.certificate.exponents == Monomial::from_dense({1, 0}));
    CHECK(res.certificate.coefficient == Scalar::from_integer(2, sys.field));
    CHECK(res.certificate.at_value == 2);
    CHECK(res.perms.edge_cycles(sys, 0) == "id");
}

TEST_CASE("permutation search needs a swap when the step coefficient dies") {
    // Second bracket chosen so the identity coefficient cancels exactly.
    auto sys = rational_system("3 2\n3 1 2 3\n3 1 2 3\n", {{1, 2, 3}, {1, -2, 5}});
    hypat::RepresentativeSystem r{{1, 2}};
    auto res = hypat::permutation_search(sys, r, {1, 2, 3});
    CHECK(res.certificate.exponents == Monomial::from_dense({1, 1, 0}));
    CHECK(res.certificate.coefficient == Scalar::from_integer(-3, sys.field));
    CHECK(res.perms.edge_cycles(sys, 0) == "id");
    CHECK(res.perms.edge_cycles(sys, 1) == "(1 2)");
    auto permuted = hypat::apply_permutations(sys, res.perms);
    CHECK(hypat::coefficient_of(permuted, res.certificate.exponents) ==
          res.certificate.coefficient);
}

TEST_CASE("permutation search rejects bad inputs") {
    auto balanced = rational_system("2 1\n2 1 2\n", {{1, 1}});
    hypat::RepresentativeSystem r{{1}};
    CHECK_THROWS_AS(hypat::permutation_search(balanced, r, {1, 2}), std::invalid_argument);

    auto sys = rational_system("2 1\n2 1 2\n", {{2, 1}});
    hypat::RepresentativeSystem late{{2}};  // representative equals the latest vertex
    CHECK_THROWS_AS(hypat::permutation_search(sys, late, {1, 2}), std::invalid_argument);
    hypat::RepresentativeSystem outside{{3}};
    CHECK_THROWS_AS(hypat::permutation_search(sys, outside, {1, 2}), std::invalid_argument);
}

TEST_CASE("permutation search random property") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 50) {
        auto sys = random_unbalanced_system(rng, 6, 6, 4);
        const auto& h = sys.hypergraph;
        std::vector<int> order(h.n);
        for (int i = 0; i < h.n; ++i) order[i] = i + 1;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> pos(h.n + 1);
        for (int i = 0; i < h.n; ++i) pos[order[i]] = i;
        hypat::RepresentativeSystem r;
        for (const auto& e : h.edges) {
            int latest = e[0];
            for (int v : e)
                if (pos[v] > pos[latest]) latest = v;
            std::vector<int> options;
            for (int v : e)
                if (v != latest) options.push_back(v);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(options.size()) - 1);
            r.rep.push_back(options[pick(rng)]);
        }
        auto res = hypat::permutation_search(sys, r, order);
        Monomial expect;
        for (int v : r.rep) expect = expect.times(v);
        CHECK(res.certificate.exponents == expect);
        auto permuted = hypat::apply_permutations(sys, res.perms);
        CHECK(hypat::coefficient_of(permuted, expect) == res.certificate.coefficient);
        CHECK_FALSE(res.certificate.coefficient.is_zero());
        ++done;
    }
}

TEST_CASE("main pipeline on the tetrahedron") {
    auto sys = tetra_system();
    auto res = hypat::theorem_main(sys);
    CHECK(res.capacity == 1);
    CHECK(res.bound == 3);
    CHECK(res.certificate.exponents.max_exponent() <= 2);
    auto permuted = hypat::apply_permutations(sys, res.perms);
    CHECK(hypat::coefficient_of(permuted, res.certificate.exponents) ==
          res.certificate.coefficient);
    CHECK_FALSE(res.certificate.coefficient.is_zero());
    auto at = hypat::alon_tarsi_number(permuted, hypat::kDefaultTermBudget);
    CHECK(at.at_value <= res.bound);
}

TEST_CASE("main pipeline random property") {
    std::mt19937_64 rng(2468);
    for (int trial = 0; trial < 30; ++trial) {
        auto sys = random_unbalanced_system(rng, 7, 7, 4);
        auto res = hypat::theorem_main(sys);
        auto den = hypat::edge_density_exact(sys.hypergraph);
        int k = static_cast<int>(hypat::ceil_rational(den.density).get_si());
        CHECK(res.capacity == k);
        CHECK(res.bound == 2 * k + 1);
        CHECK(res.certificate.exponents.max_exponent() <= 2 * k);
        auto permuted = hypat::apply_permutations(sys, res.perms);
        CHECK(hypat::coefficient_of(permuted, res.certificate.exponents) ==
              res.certificate.coefficient);
        CHECK_FALSE(res.certificate.coefficient.is_zero());
        auto at = hypat::alon_tarsi_number(permuted, hypat::kDefaultTermBudget);
        CHECK(at.at_value <= res.bound);
    }
}

TEST_CASE("main pipeline with repeated coefficients inside edges") {
    // Fano lines with rows (1, 1, -2): one distinct pair per edge is enough.
    LinearSystem fano = rational_system(
        "7 7\n3 1 2 3\n3 1 4 5\n3 1 6 7\n3 2 4 6\n3 2 5 7\n3 3 4 7\n3 3 5 6\n",
        {{1, 1, -2}, {1, 1, -2}, {1, 1, -2}, {1, 1, -2}, {1, 1, -2}, {1, 1, -2}, {1, 1, -2}});
    CHECK(hypat::fully_unbalanced_check(fano).fully_unbalanced);
    auto res = hypat::theorem_main(fano);
    CHECK(res.capacity == 1);
    CHECK(res.bound == 3);
    CHECK(res.certificate.exponents.max_exponent() <= 2);
    CHECK(hypat::coefficient_of(hypat::apply_permutations(fano, res.perms),
                                res.certificate.exponents) == res.certificate.coefficient);

    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 25; ++trial) {
        auto sys = random_lumpy_system(rng, 7, 7, 4);
        auto res2 = hypat::theorem_main(sys);
        CHECK(res2.certificate.exponents.max_exponent() <= 2 * res2.capacity);
        auto permuted = hypat::apply_permutations(sys, res2.perms);
        CHECK(hypat::coefficient_of(permuted, res2.certificate.exponents) ==
              res2.certificate.coefficient);
        CHECK_FALSE(res2.certificate.coefficient.is_zero());
        auto span = hypat::span_route(sys);
        CHECK(span.certificate.exponents.max_exponent() <= 2 * span.capacity);
    }
}

TEST_CASE("main pipeline rejects balanced systems") {
    auto balanced = rational_system("3 2\n2 1 2\n2 2 3\n", {{1, 1}, {1, 2}});
    CHECK_THROWS_AS(hypat::theorem_main(balanced), std::invalid_argument);
}

TEST_CASE("all ones certificates at the density ceiling") {
    Hypergraph fano = hypat::parse_hypergraph(
        "7 7\n3 1 2 3\n3 1 4 5\n3 1 6 7\n3 2 4 6\n3 2 5 7\n3 3 4 7\n3 3 5 6\n");
    auto q = FieldDescriptor::rational();
    auto cert = hypat::fully_balanced_at(fano, q);
    CHECK(cert.at_value == 2);
    CHECK(cert.exponents.total_degree() == 7);
    CHECK(hypat::coefficient_of(hypat::all_ones_system(fano, q), cert.exponents) ==
          cert.coefficient);

    auto zcert = hypat::fully_balanced_at(fano, FieldDescriptor::cyclotomic(3));
    CHECK(zcert.at_value == 2);

    Hypergraph single = hypat::parse_hypergraph("2 1\n2 1 2\n");
    CHECK(hypat::fully_balanced_at(single, q).at_value == 2);

    Hypergraph c4 = hypat::parse_hypergraph("4 4\n2 1 2\n2 2 3\n2 3 4\n2 1 4\n");
    CHECK_THROWS_AS(hypat::fully_balanced_at(c4, FieldDescriptor::prime_field(2)),
                    std::invalid_argument);
    // Over GF(2) the all-ones cycle polynomial really does worse than the
    // characteristic-zero value 2.
    auto gf2 = hypat::alon_tarsi_number(hypat::all_ones_system(c4, FieldDescriptor::prime_field(2)),
                                        hypat::kDefaultTermBudget);
    CHECK(gf2.at_value == 3);
    CHECK(hypat::fully_balanced_at(c4, q).at_value == 2);
}

TEST_CASE("all ones certificate equals the direct search in characteristic zero") {
    std::mt19937_64 rng(11235);
    auto q = FieldDescriptor::rational();
    for (int trial = 0; trial < 50; ++trial) {
        Hypergraph h = random_hypergraph(rng, 6, 6, 4);
        auto cert = hypat::fully_balanced_at(h, q);
        auto at = hypat::alon_tarsi_number(hypat::all_ones_system(h, q),
                                           hypat::kDefaultTermBudget);
        CHECK(cert.at_value == at.at_value);
    }
}

TEST_CASE("difference decompositions recombine exactly") {
    auto f = FieldDescriptor::cyclotomic(3);
    Scalar one = Scalar::one(f);
    Scalar w = Scalar::root_of_unity(3, 1);
    Scalar w2 = Scalar::root_of_unity(3, 2);
    LinearSystem sys;
    sys.hypergraph = hypat::parse_hypergraph("3 1\n3 1 2 3\n");
    sys.field = f;
    sys.coeffs = {{one, w, w2}};
    sys.validate();

    auto dec = hypat::difference_decomposition(sys, 0, 1, 2);
    CHECK(dec.terms.size() == 2);
    CHECK(dec.terms[0].second == (one - w).inverse());
    CHECK(same_poly(recombine(sys, dec), difference_poly(f, 1, 2)));

    auto empty = hypat::difference_decomposition(sys, 0, 2, 2);
    CHECK(empty.terms.empty());

    // Equal endpoint coefficients force the detour through vertex 3.
    auto tied = rational_system("3 1\n3 1 2 3\n", {{1, 1, 2}});
    auto dec4 = hypat::difference_decomposition(tied, 0, 1, 2);
    CHECK(dec4.terms.size() == 4);
    CHECK(same_poly(recombine(tied, dec4), difference_poly(tied.field, 1, 2)));

    auto flat = rational_system("3 1\n3 1 2 3\n", {{5, 5, 5}});
    CHECK_THROWS_AS(hypat::difference_decomposition(flat, 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(hypat::difference_decomposition(tied, 0, 1, 4), std::invalid_argument);
}

TEST_CASE("difference decomposition random recombination") {
    std::mt19937_64 rng(97531);
    auto q = FieldDescriptor::rational();
    int done = 0;
    while (done < 100) {
        Hypergraph h = random_hypergraph(rng, 6, 4, 4);
        LinearSystem sys;
        sys.hypergraph = h;
        sys.field = q;
        std::uniform_int_distribution<int> cd(-3, 3);
        for (const auto& e : h.edges) {
            std::vector<Scalar> row;
            for (std::size_t j = 0; j < e.size(); ++j) {
                int v = cd(rng);
                if (v == 0) v = 1;
                row.push_back(Scalar::from_integer(v, q));
            }
            sys.coeffs.push_back(std::move(row));
        }
        sys.validate();
        std::uniform_int_distribution<int> ed(0, static_cast<int>(h.edges.size()) - 1);
        int e = ed(rng);
        const auto& verts = h.edges[static_cast<std::size_t>(e)];
        std::uniform_int_distribution<int> vd(0, static_cast<int>(verts.size()) - 1);
        int u = verts[static_cast<std::size_t>(vd(rng))];
        int w = verts[static_cast<std::size_t>(vd(rng))];
        bool all_equal = true;
        for (std::size_t j = 1; j < verts.size(); ++j)
            if (!(sys.coeffs[static_cast<std::size_t>(e)][j] ==
                  sys.coeffs[static_cast<std::size_t>(e)][0]))
                all_equal = false;
        if (all_equal) continue;
        auto dec = hypat::difference_decomposition(sys, e, u, w);
        hypat::SparsePoly expect;
        expect.field = q;
        if (u != w) expect = difference_poly(q, u, w);
        CHECK(same_poly(recombine(sys, dec), expect));
        ++done;
    }
}

TEST_CASE("span route on small systems") {
    auto sys = rational_system("3 3\n2 1 2\n2 2 3\n2 1 3\n", {{1, 2}, {2, 1}, {-2, 1}});
    auto res = hypat::span_route(sys);
    CHECK(res.capacity == 1);
    CHECK(res.bound == 3);
    CHECK(res.certificate.exponents.max_exponent() <= 2);
    auto permuted = hypat::apply_permutations(sys, res.perms);
    CHECK(hypat::coefficient_of(permuted, res.certificate.exponents) ==
          res.certificate.coefficient);
    CHECK_FALSE(res.certificate.coefficient.is_zero());

    auto single = rational_system("2 1\n2 1 2\n", {{2, 1}});
    auto sres = hypat::span_route(single);
    CHECK(sres.certificate.exponents.total_degree() == 1);
    CHECK_FALSE(sres.certificate.coefficient.is_zero());
}

TEST_CASE("span route agrees with the main pipeline bound") {
    std::mt19937_64 rng(86420);
    for (int trial = 0; trial < 25; ++trial) {
        auto sys = random_unbalanced_system(rng, 7, 7, 4);
        auto main = hypat::theorem_main(sys);
        auto span = hypat::span_route(sys);
        CHECK(span.bound == main.bound);
        CHECK(span.capacity == main.capacity);
        CHECK(span.certificate.exponents.max_exponent() <= 2 * span.capacity);
        auto permuted = hypat::apply_permutations(sys, span.perms);
        CHECK(hypat::coefficient_of(permuted, span.certificate.exponents) ==
              span.certificate.coefficient);
    }
}
