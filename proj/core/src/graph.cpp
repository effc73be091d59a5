#include "hypat/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hypat/errors.hpp"

namespace hypat {

void SimpleGraph::validate() const {
    require(n >= 0, "negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        require(u >= 1 && u <= n && v >= 1 && v <= n, "edge vertex out of range");
        require(u < v, "edge must be stored as an ordered pair u < v");
        require(seen.insert({u, v}).second, "parallel edge");
    }
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

std::vector<int> SimpleGraph::incident_edges(int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first == v || edges[i].second == v) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimpleGraph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

bool SimpleGraph::connected() const {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<bool> vis(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack = {1};
    vis[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!vis[static_cast<std::size_t>(w)]) {
                vis[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

SimpleGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::istringstream& ls) {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            ls.clear();
            ls.str(line);
            return true;
        }
        return false;
    };

    std::istringstream ls;
    if (!next_line(ls)) throw parse_error("empty graph input");
    int n = 0, m = 0;
    std::string extra;
    if (!(ls >> n >> m) || (ls >> extra))
        throw parse_error("line " + std::to_string(lineno) + ": expected 'n m'");
    if (n < 1) throw parse_error("line " + std::to_string(lineno) + ": need at least one vertex");
    if (m < 0) throw parse_error("line " + std::to_string(lineno) + ": negative edge count");

    SimpleGraph g;
    g.n = n;
    g.edges.reserve(static_cast<std::size_t>(m));
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        if (!next_line(ls))
            throw parse_error("expected " + std::to_string(m) + " edge lines, got " +
                              std::to_string(i));
        int u = 0, v = 0;
        if (!(ls >> u >> v) || (ls >> extra))
            throw parse_error("line " + std::to_string(lineno) + ": expected 'u v'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error("line " + std::to_string(lineno) + ": vertex out of range");
        if (u == v) throw parse_error("line " + std::to_string(lineno) + ": loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw parse_error("line " + std::to_string(lineno) + ": parallel edge");
        g.edges.emplace_back(u, v);
    }
    return g;
}

SimpleGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

std::string format_graph(const SimpleGraph& g) {
    std::ostringstream os;
    os << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
    return os.str();
}

bool has_perfect_matching(const SimpleGraph& g) {
    g.validate();
    require(g.n <= 24, "perfect matching check limited to 24 vertices");
    if (g.n % 2 != 0) return false;
    std::vector<unsigned> nb(static_cast<std::size_t>(g.n) + 1, 0);
    for (auto [u, v] : g.edges) {
        nb[static_cast<std::size_t>(u)] |= 1u << (v - 1);
        nb[static_cast<std::size_t>(v)] |= 1u << (u - 1);
    }
    // can[mask]: the vertices in mask admit a perfect matching among themselves.
    std::vector<char> can(1u << g.n, 0);
    can[0] = 1;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        int first = __builtin_ctz(mask);
        unsigned partners = nb[static_cast<std::size_t>(first) + 1] & mask;
        while (partners && !can[mask]) {
            int p = __builtin_ctz(partners);
            partners &= partners - 1;
            can[mask] = can[mask & ~(1u << first) & ~(1u << p)];
        }
    }
    return can[(1u << g.n) - 1];
}

} // namespace hypat
