#include "hypat/one_two_three.hpp"

#include <algorithm>
#include <map>

#include "hypat/errors.hpp"
#include "matching.hpp"

namespace hypat {

namespace {

// Line-graph neighbors of each edge: indices sharing exactly one endpoint.
std::vector<std::vector<int>> line_adjacency(const SimpleGraph& g) {
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> at(static_cast<std::size_t>(g.n) + 1);
    for (int i = 0; i < m; ++i) {
        at[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(i)].first)].push_back(i);
        at[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(i)].second)].push_back(i);
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges[static_cast<std::size_t>(i)];
        for (int j : at[static_cast<std::size_t>(u)])
            if (j != i) adj[static_cast<std::size_t>(i)].push_back(j);
        for (int j : at[static_cast<std::size_t>(v)])
            if (j != i) adj[static_cast<std::size_t>(i)].push_back(j);
        auto& row = adj[static_cast<std::size_t>(i)];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

// Connectivity of the edge-bearing part; isolated vertices are ignored so that
// peeled graphs (which keep their vertex labels) still qualify.
bool edge_connected(const SimpleGraph& g) {
    if (g.edges.empty()) return true;
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(g.n) + 1);
    for (auto [u, v] : g.edges) {
        nb[static_cast<std::size_t>(u)].push_back(v);
        nb[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<int> stack{g.edges[0].first};
    seen[static_cast<std::size_t>(g.edges[0].first)] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : nb[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
    }
    for (auto [u, v] : g.edges)
        if (!seen[static_cast<std::size_t>(u)] || !seen[static_cast<std::size_t>(v)])
            return false;
    return true;
}

int edge_index_of(const SimpleGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i] == std::make_pair(u, v)) return static_cast<int>(i);
    check_internal(false, "edge lookup failed");
    return -1;
}

} // namespace

PeelResult two_pendant_peel(const SimpleGraph& g) {
    g.validate();
    require(edge_connected(g), "two_pendant_peel needs a connected graph");

    PeelResult out;
    out.reduced = g;
    for (;;) {
        auto& cur = out.reduced;
        int found_u = 0, found_v = 0, found_w = 0;
        for (int u = 1; u <= cur.n && found_u == 0; ++u) {
            if (cur.degree(u) != 1) continue;
            int v = cur.neighbors(u)[0];
            if (cur.degree(v) != 2) continue;
            for (int w : cur.neighbors(v))
                if (w != u) { found_u = u; found_v = v; found_w = w; }
        }
        if (found_u == 0) break;
        out.record.removed.push_back({found_u, found_v, found_w});
        std::vector<std::pair<int, int>> kept;
        kept.reserve(cur.edges.size());
        for (auto e : cur.edges)
            if (e.first != found_u && e.first != found_v && e.second != found_u &&
                e.second != found_v)
                kept.push_back(e);
        cur.edges = std::move(kept);
    }
    out.verdict =
        out.reduced.edges.size() == 1 ? PeelVerdict::EndsK2 : PeelVerdict::EndsNotK2;
    return out;
}

Hypergraph neighborhood_hypergraph(const SimpleGraph& g) {
    g.validate();
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> adj = line_adjacency(g);

    Hypergraph h;
    h.n = m;
    h.edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        require(adj[static_cast<std::size_t>(i)].size() >= 2,
                "neighborhood hyperedge needs two members; peel 2-pendants and drop "
                "isolated edges first");
        std::vector<int> f;
        f.reserve(adj[static_cast<std::size_t>(i)].size());
        for (int j : adj[static_cast<std::size_t>(i)]) f.push_back(j + 1);
        h.edges.push_back(std::move(f));
    }
    h.validate();
    return h;
}

EdgeBijection edge_bijection(const SimpleGraph& g) {
    g.validate();
    require(edge_connected(g), "edge_bijection needs a connected graph");
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> adj = line_adjacency(g);

    detail::Matcher mt(adj, static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        if (!mt.run(e)) {
            detail::HallWitness w = detail::hall_witness(adj, mt.match_right, e);
            HallViolator viol;
            viol.edge_indices = std::move(w.left);
            viol.neighborhood_size = static_cast<long long>(w.right.size());
            check_internal(viol.neighborhood_size < static_cast<long long>(viol.edge_indices.size()),
                           "matching failed but Hall's condition holds");
            return viol;
        }
    }
    std::vector<int> map(static_cast<std::size_t>(m), -1);
    for (int c = 0; c < m; ++c) {
        int e = mt.match_right[static_cast<std::size_t>(c)];
        check_internal(e >= 0, "perfect matching left a right vertex free");
        map[static_cast<std::size_t>(e)] = c;
    }
    return map;
}

LinearSystem coloring_polynomial_pG(const SimpleGraph& g) {
    g.validate();
    const int m = static_cast<int>(g.edges.size());
    const FieldDescriptor f = FieldDescriptor::rational();

    LinearSystem sys;
    sys.hypergraph = neighborhood_hypergraph(g);
    sys.field = f;
    sys.coeffs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges[static_cast<std::size_t>(i)];
        const auto& bracket = sys.hypergraph.edges[static_cast<std::size_t>(i)];
        std::vector<Scalar> row;
        row.reserve(bracket.size());
        for (int var : bracket) {
            auto [a, b] = g.edges[static_cast<std::size_t>(var - 1)];
            bool at_u = (a == u || b == u);
            row.push_back(at_u ? Scalar::one(f) : -Scalar::one(f));
        }
        sys.coeffs.push_back(std::move(row));
    }
    sys.validate();
    return sys;
}

Scalar pg_value(const SimpleGraph& g, const std::vector<Scalar>& edge_weights) {
    g.validate();
    require(edge_weights.size() == g.edges.size(), "one weight per edge");
    FieldDescriptor f =
        edge_weights.empty() ? FieldDescriptor::rational() : edge_weights[0].field();
    for (const Scalar& w : edge_weights)
        require(w.field() == f, "weights must share one field");

    std::vector<Scalar> sum(static_cast<std::size_t>(g.n) + 1, Scalar::zero(f));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        sum[static_cast<std::size_t>(u)] = sum[static_cast<std::size_t>(u)] + edge_weights[i];
        sum[static_cast<std::size_t>(v)] = sum[static_cast<std::size_t>(v)] + edge_weights[i];
    }
    Scalar val = Scalar::one(f);
    for (auto [u, v] : g.edges)
        val = val * (sum[static_cast<std::size_t>(u)] - sum[static_cast<std::size_t>(v)]);
    return val;
}

EdgeDensityWitness check_ed_HG(const SimpleGraph& g) {
    g.validate();
    require(edge_connected(g), "check_ed_HG needs a connected graph");

    PeelResult peel = two_pendant_peel(g);
    require(peel.verdict == PeelVerdict::EndsNotK2,
            "check_ed_HG excludes trees with a perfect matching");

    EdgeDensityWitness out;
    out.h_of.assign(g.edges.size(), -1);

    // Each removed 2-pendant pairs its two edges with each other.
    for (const auto& st : peel.record.removed) {
        int uv = edge_index_of(g, st.u, st.v);
        int vw = edge_index_of(g, st.v, st.w);
        out.h_of[static_cast<std::size_t>(uv)] = vw;
        out.h_of[static_cast<std::size_t>(vw)] = uv;
    }

    // The peeled core keeps a matching-based bijection; compose with the
    // edge-to-hyperedge correspondence (partner edge f(e) labels a hyperedge
    // containing e, because e and f(e) share a vertex).
    if (!peel.reduced.edges.empty()) {
        EdgeBijection bij = edge_bijection(peel.reduced);
        check_internal(std::holds_alternative<std::vector<int>>(bij),
                       "peeled core admits no edge bijection");
        const auto& map = std::get<std::vector<int>>(bij);
        for (std::size_t i = 0; i < peel.reduced.edges.size(); ++i) {
            auto e = peel.reduced.edges[i];
            auto p = peel.reduced.edges[static_cast<std::size_t>(map[i])];
            out.h_of[static_cast<std::size_t>(edge_index_of(g, e.first, e.second))] =
                edge_index_of(g, p.first, p.second);
        }

        Hypergraph core = neighborhood_hypergraph(peel.reduced);
        DensityReport d =
            core.n <= 20 ? edge_density_exact(core) : edge_density_flow(core);
        out.holds = d.density <= 1;
    } else {
        out.holds = true; // no hyperedges at all
    }
    return out;
}

std::optional<std::vector<int>> find_123_weighting(const SimpleGraph& g,
                                                   const std::vector<int>& weights) {
    g.validate();
    require(!weights.empty(), "weight set must be nonempty");
    const int m = static_cast<int>(g.edges.size());
    if (m > 16) throw budget_error("find_123_weighting handles at most 16 edges");

    // last_edge[v]: index of the final edge completing v's incident sum.
    std::vector<int> last_edge(static_cast<std::size_t>(g.n) + 1, -1);
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges[static_cast<std::size_t>(i)];
        last_edge[static_cast<std::size_t>(u)] = i;
        last_edge[static_cast<std::size_t>(v)] = i;
    }
    std::vector<std::vector<int>> closing(static_cast<std::size_t>(m));
    for (int v = 1; v <= g.n; ++v)
        if (last_edge[static_cast<std::size_t>(v)] >= 0)
            closing[static_cast<std::size_t>(last_edge[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<long long> sum(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<char> done(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<int> chosen(static_cast<std::size_t>(m), 0);

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        auto [u, v] = g.edges[static_cast<std::size_t>(i)];
        for (int w : weights) {
            chosen[static_cast<std::size_t>(i)] = w;
            sum[static_cast<std::size_t>(u)] += w;
            sum[static_cast<std::size_t>(v)] += w;
            bool ok = true;
            for (int x : closing[static_cast<std::size_t>(i)]) {
                done[static_cast<std::size_t>(x)] = 1;
                for (int y : g.neighbors(x))
                    if (done[static_cast<std::size_t>(y)] &&
                        sum[static_cast<std::size_t>(y)] == sum[static_cast<std::size_t>(x)])
                        ok = false;
            }
            if (ok && self(self, i + 1)) return true;
            for (int x : closing[static_cast<std::size_t>(i)]) done[static_cast<std::size_t>(x)] = 0;
            sum[static_cast<std::size_t>(u)] -= w;
            sum[static_cast<std::size_t>(v)] -= w;
        }
        return false;
    };
    if (m == 0) return std::vector<int>{};
    if (!rec(rec, 0)) return std::nullopt;
    return chosen;
}

} // namespace hypat
