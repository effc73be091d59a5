#include "hypat/harness.hpp"

#include <random>
#include <set>

#include "hypat/errors.hpp"

namespace hypat {

namespace {

std::vector<Scalar> scalar_pool(const FieldDescriptor& f) {
    std::vector<Scalar> pool;
    auto push = [&](const Scalar& s) {
        if (s.is_zero()) return;
        for (const Scalar& p : pool)
            if (p == s) return;
        pool.push_back(s);
    };
    switch (f.kind()) {
        case FieldKind::Rational:
            for (long v : {1L, -1L, 2L, -2L}) push(Scalar::from_integer(v, f));
            break;
        case FieldKind::Cyclotomic:
            for (long v : {1L, -1L, 2L, -2L}) push(Scalar::from_integer(v, f));
            push(Scalar::root_of_unity(f.order(), 1));
            push(Scalar::root_of_unity(f.order(), 2));
            break;
        case FieldKind::PrimeField: {
            const std::uint64_t p = f.modulus();
            for (std::uint64_t r : {std::uint64_t{1}, std::uint64_t{2}, p - 1, p - 2})
                push(Scalar::from_residue(r % p, p));
            break;
        }
    }
    check_internal(!pool.empty(), "scalar pool came out empty");
    return pool;
}

} // namespace

LinearSystem random_instance(std::uint64_t seed, int n, int m, int max_edge_size,
                             const FieldDescriptor& field) {
    require(n >= 2, "random_instance needs n >= 2");
    require(m >= 1, "random_instance needs m >= 1");
    require(max_edge_size >= 2, "random_instance needs max_edge_size >= 2");

    std::mt19937_64 rng(seed);
    // raw modulo keeps the draw sequence identical across standard libraries
    auto draw = [&](std::size_t k) { return static_cast<int>(rng() % k); };
    const std::vector<Scalar> pool = scalar_pool(field);
    const int kmax = std::min(max_edge_size, n);

    LinearSystem sys;
    sys.field = field;
    sys.hypergraph.n = n;
    for (int i = 0; i < m; ++i) {
        int size = 2 + draw(static_cast<std::size_t>(kmax - 1));
        std::set<int> verts;
        while (static_cast<int>(verts.size()) < size)
            verts.insert(1 + draw(static_cast<std::size_t>(n)));
        sys.hypergraph.edges.emplace_back(verts.begin(), verts.end());
        std::vector<Scalar> row;
        row.reserve(verts.size());
        for (std::size_t j = 0; j < verts.size(); ++j) row.push_back(pool[static_cast<std::size_t>(draw(pool.size()))]);
        sys.coeffs.push_back(std::move(row));
    }
    sys.validate();
    return sys;
}

SearchSummary conjecture_search(const SearchConfig& cfg) {
    require(cfg.instances >= 1, "search needs at least one instance");
    require(cfg.term_budget > 0, "term budget must be positive");

    SearchSummary out;
    for (int i = 0; i < cfg.instances; ++i) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
        LinearSystem sys = random_instance(seed, cfg.n, cfg.m, cfg.max_edge_size, cfg.field);
        if (cfg.balanced) sys = all_ones_system(sys.hypergraph, cfg.field);

        SearchRecord rec;
        rec.index = i;
        rec.instance = format_linear_system(sys);
        rec.ed = edge_density_flow(sys.hypergraph).density;
        try {
            rec.at = alon_tarsi_number(sys, cfg.term_budget).at_value;
        } catch (const budget_error&) {
            out.skipped.push_back(i);
            continue;
        }
        rec.bound = 2 * static_cast<int>(ceil_rational(rec.ed).get_si()) + 1;
        rec.violation = rec.at > rec.bound;
        if (rec.violation) {
            // recompute everything from the reproduction text before believing it
            LinearSystem fresh = parse_linear_system(rec.instance);
            DensityReport d2 = fresh.hypergraph.n <= 24 ? edge_density_exact(fresh.hypergraph)
                                                        : edge_density_flow(fresh.hypergraph);
            int at2 = alon_tarsi_number(fresh, cfg.term_budget).at_value;
            check_internal(d2.density == rec.ed && at2 == rec.at,
                           "violation re-verification disagrees with the first pass");
            ++out.violations;
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

} // namespace hypat
