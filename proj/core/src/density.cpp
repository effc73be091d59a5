#include <algorithm>
#include <cstdint>
#include <queue>

#include "hypat/errors.hpp"
#include "hypat/hypergraph.hpp"

namespace hypat {

namespace {

// Lexicographic order on equal-cardinality vertex sets given as bitmasks: the set
// owning the lowest vertex in the symmetric difference is the lex-smaller sequence.
bool lex_less_equal_size(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
}

std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v + 1);
    return out;
}

// Exact-rational Dinic.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count) : head_(static_cast<std::size_t>(node_count)) {}

    void add_edge(int from, int to, mpq_class cap) {
        adj_.push_back({to, std::move(cap), static_cast<int>(adj_.size()) + 1});
        head_[static_cast<std::size_t>(from)].push_back(static_cast<int>(adj_.size()) - 1);
        adj_.push_back({from, mpq_class(0), static_cast<int>(adj_.size()) - 1});
        head_[static_cast<std::size_t>(to)].push_back(static_cast<int>(adj_.size()) - 1);
    }

    mpq_class max_flow(int s, int t) {
        mpq_class total = 0;
        while (bfs(s, t)) {
            iter_.assign(head_.size(), 0);
            while (true) {
                mpq_class pushed = dfs(s, t, mpq_class(-1));
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    // After max_flow: nodes reachable from s in the residual network.
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = adj_[static_cast<std::size_t>(id)];
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }

    // Nodes that can still reach t in the residual network.
    std::vector<char> sink_side(int t) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(t);
        seen[static_cast<std::size_t>(t)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : head_[static_cast<std::size_t>(u)]) {
                // arc into u with residual capacity: the partner of (u -> x)
                const Arc& back = adj_[static_cast<std::size_t>(adj_[static_cast<std::size_t>(id)].rev)];
                int from = adj_[static_cast<std::size_t>(id)].to;
                if (back.cap > 0 && !seen[static_cast<std::size_t>(from)]) {
                    seen[static_cast<std::size_t>(from)] = 1;
                    q.push(from);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        mpq_class cap; // residual capacity
        int rev;
    };

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(s);
        level_[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = adj_[static_cast<std::size_t>(id)];
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    mpq_class dfs(int u, int t, mpq_class limit) {
        if (u == t) return limit;
        for (std::size_t& i = iter_[static_cast<std::size_t>(u)]; i < head_[static_cast<std::size_t>(u)].size(); ++i) {
            int id = head_[static_cast<std::size_t>(u)][i];
            Arc& a = adj_[static_cast<std::size_t>(id)];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(u)] + 1)
                continue;
            mpq_class want = (limit < 0 || a.cap < limit) ? a.cap : limit;
            mpq_class got = dfs(a.to, t, want);
            if (got > 0) {
                a.cap -= got;
                adj_[static_cast<std::size_t>(a.rev)].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> head_;
    std::vector<Arc> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

// Witness comparison: smaller cardinality wins, then lex on the sorted vertex list.
bool witness_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

DensityReport edge_density_exact(const Hypergraph& h) {
    h.validate();
    require(h.n >= 1, "density needs at least one vertex");
    require(h.n <= 24, "edge_density_exact: vertex count exceeds brute-force cap (24)");

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::uint32_t m = 0;
        for (int v : e) m |= 1u << (v - 1);
        edge_masks.push_back(m);
    }

    std::uint32_t best_mask = 1; // X = {1}
    long long best_count = 0;
    int best_size = 1;
    if (!edge_masks.empty()) {
        for (std::uint32_t mask = 1, top = 1u << h.n; mask < top; ++mask) {
            long long count = 0;
            for (std::uint32_t em : edge_masks)
                if ((em & mask) == em) ++count;
            int size = __builtin_popcount(mask);
            // compare count/size vs best_count/best_size
            long long lhs = count * best_size;
            long long rhs = best_count * size;
            bool better = lhs > rhs;
            if (!better && lhs == rhs) {
                if (size < best_size) better = true;
                else if (size == best_size && lex_less_equal_size(mask, best_mask)) better = true;
            }
            if (better) {
                best_mask = mask;
                best_count = count;
                best_size = size;
            }
        }
    }

    DensityReport r;
    r.density = mpq_class(static_cast<long>(best_count), static_cast<long>(best_size));
    r.density.canonicalize();
    r.witness = mask_to_vertices(best_mask);
    return r;
}

DensityReport edge_density_flow(const Hypergraph& h) {
    h.validate();
    require(h.n >= 1, "density needs at least one vertex");

    const int m = static_cast<int>(h.edges.size());
    const int n = h.n;
    // nodes: 0 = source, 1..m = edges, m+1..m+n = vertices, m+n+1 = sink
    const int s = 0, t = m + n + 1;
    auto edge_node = [&](int i) { return 1 + i; };
    auto vertex_node = [&](int v) { return m + v; };

    auto count_inside = [&](const std::vector<char>& in_x) {
        long long c = 0;
        for (const auto& e : h.edges) {
            bool inside = true;
            for (int v : e)
                if (!in_x[static_cast<std::size_t>(v)]) { inside = false; break; }
            if (inside) ++c;
        }
        return c;
    };

    // Builds the Goldberg network for parameter g; optionally forces one vertex to
    // the source side. Returns the network ready for max_flow.
    auto build = [&](const mpq_class& g, int forced_vertex) {
        FlowNetwork net(m + n + 2);
        mpq_class inf = mpq_class(m + 1) + g * n;
        for (int i = 0; i < m; ++i) {
            net.add_edge(s, edge_node(i), mpq_class(1));
            for (int v : h.edges[static_cast<std::size_t>(i)])
                net.add_edge(edge_node(i), vertex_node(v), inf);
        }
        for (int v = 1; v <= n; ++v) net.add_edge(vertex_node(v), t, g);
        if (forced_vertex >= 1) net.add_edge(s, vertex_node(forced_vertex), inf);
        return net;
    };

    // Dinkelbach: g increases through achieved densities until no set beats it.
    mpq_class g(m, n);
    g.canonicalize();
    while (true) {
        FlowNetwork net = build(g, 0);
        net.max_flow(s, t);
        // Maximal maximizer of |E(X)| - g|X|: complement of the sink-reachable side.
        std::vector<char> to_t = net.sink_side(t);
        std::vector<char> in_x(static_cast<std::size_t>(n) + 1, 0);
        long long size = 0;
        for (int v = 1; v <= n; ++v) {
            if (!to_t[static_cast<std::size_t>(vertex_node(v))]) {
                in_x[static_cast<std::size_t>(v)] = 1;
                ++size;
            }
        }
        if (size == 0) break; // max over nonempty sets is <= 0, so g is optimal
        long long cnt = count_inside(in_x);
        mpq_class achieved(static_cast<long>(cnt), static_cast<long>(size));
        achieved.canonicalize();
        if (achieved <= g) break;
        g = achieved;
    }

    // Canonical witness: every minimum-cardinality maximizer equals, for each of its
    // vertices v, the inclusion-minimal maximizer containing v; scan those candidates.
    std::vector<int> best;
    for (int v = 1; v <= n; ++v) {
        FlowNetwork net = build(g, v);
        net.max_flow(s, t);
        std::vector<char> from_s = net.source_side(s);
        std::vector<char> in_x(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> x;
        for (int u = 1; u <= n; ++u) {
            if (from_s[static_cast<std::size_t>(vertex_node(u))]) {
                in_x[static_cast<std::size_t>(u)] = 1;
                x.push_back(u);
            }
        }
        check_internal(in_x[static_cast<std::size_t>(v)] != 0, "forced vertex left the source side");
        long long cnt = count_inside(in_x);
        mpq_class achieved(static_cast<long>(cnt), static_cast<long>(x.size()));
        achieved.canonicalize();
        if (achieved != g) continue; // v lies in no maximizer
        if (best.empty() || witness_less(x, best)) best = std::move(x);
    }
    check_internal(!best.empty(), "no density maximizer found at the optimal parameter");

    DensityReport r;
    r.density = g;
    r.witness = std::move(best);
    return r;
}

} // namespace hypat
