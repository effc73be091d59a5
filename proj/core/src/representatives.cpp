#include "hypat/representatives.hpp"

#include <algorithm>

#include "hypat/errors.hpp"
#include "matching.hpp"

namespace hypat {

HallResult hall_representatives(const Hypergraph& h, int k) {
    require(k >= 1, "representative multiplicity bound must be >= 1");
    h.validate();

    CloneResult cl = clone_hypergraph(h, k);
    const int m = static_cast<int>(h.edges.size());

    // left side: edge indices; right side: clone vertices 1..n*k
    detail::Matcher mt(cl.clone.edges, static_cast<std::size_t>(cl.clone.n) + 1);
    std::vector<int> match_left(static_cast<std::size_t>(m), -1);
    for (int e = 0; e < m; ++e) {
        if (!mt.run(e)) {
            detail::HallWitness w = detail::hall_witness(cl.clone.edges, mt.match_right, e);
            HallViolator viol;
            viol.edge_indices = std::move(w.left);
            viol.neighborhood_size = static_cast<long long>(w.right.size());
            check_internal(viol.neighborhood_size < static_cast<long long>(viol.edge_indices.size()),
                           "matching failed but Hall's condition holds");
            return viol;
        }
    }
    for (int c = 1; c <= cl.clone.n; ++c) {
        int e = mt.match_right[static_cast<std::size_t>(c)];
        if (e >= 0) match_left[static_cast<std::size_t>(e)] = c;
    }

    RepresentativeSystem rs;
    rs.rep.resize(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e)
        rs.rep[static_cast<std::size_t>(e)] = cl.to_base(match_left[static_cast<std::size_t>(e)]);
    return rs;
}

MultigraphReduction multigraph_reduction(const Hypergraph& h, int k, bool trusted_density) {
    require(k >= 1, "density bound must be >= 1");
    h.validate();
    if (!trusted_density) {
        require(h.n <= 24,
                "multigraph_reduction: density check needs n <= 24; pass trusted_density");
        DensityReport d = edge_density_exact(h);
        require(d.density <= k, "multigraph_reduction: edge density exceeds k");
    }

    HallResult hall = hall_representatives(h, k);
    require(std::holds_alternative<RepresentativeSystem>(hall),
            "multigraph_reduction: Hall system failed (density exceeds k)");

    MultigraphReduction out;
    out.reps = std::get<RepresentativeSystem>(hall);
    out.g.n = h.n;
    out.g.edges.reserve(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        int rv = out.reps.rep[i];
        int second = -1;
        for (int v : h.edges[i]) {
            if (v != rv) { second = v; break; } // smallest other vertex
        }
        check_internal(second > 0, "edge has no second endpoint");
        std::vector<int> f{rv, second};
        std::sort(f.begin(), f.end());
        out.g.edges.push_back(std::move(f));
    }
    return out;
}

} // namespace hypat
