#include "hypat/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "hypat/errors.hpp"

namespace hypat {

void Hypergraph::validate() const {
    require(n >= 0, "negative vertex count");
    for (const auto& e : edges) {
        require(e.size() >= 2, "hyperedge of size < 2");
        for (std::size_t i = 0; i < e.size(); ++i) {
            require(e[i] >= 1 && e[i] <= n, "edge vertex out of range");
            require(i == 0 || e[i - 1] < e[i], "edge vertices not strictly increasing");
        }
    }
}

int Hypergraph::max_edge_size() const {
    std::size_t best = 0;
    for (const auto& e : edges) best = std::max(best, e.size());
    return static_cast<int>(best);
}

Hypergraph parse_hypergraph(std::istream& in) {
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
    if (!next_line(ls)) throw parse_error("empty hypergraph input");
    int n = 0, m = 0;
    std::string extra;
    if (!(ls >> n >> m) || (ls >> extra))
        throw parse_error("line " + std::to_string(lineno) + ": expected 'n m'");
    if (n < 1) throw parse_error("line " + std::to_string(lineno) + ": need at least one vertex");
    if (m < 0) throw parse_error("line " + std::to_string(lineno) + ": negative edge count");

    Hypergraph h;
    h.n = n;
    h.edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_line(ls))
            throw parse_error("expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        int k = 0;
        if (!(ls >> k) || k < 2)
            throw parse_error("line " + std::to_string(lineno) + ": edge size must be >= 2");
        std::vector<int> e(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            if (!(ls >> e[static_cast<std::size_t>(j)]))
                throw parse_error("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(k) + " vertices");
        }
        if (ls >> extra) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
        for (int j = 0; j < k; ++j) {
            int v = e[static_cast<std::size_t>(j)];
            if (v < 1 || v > n)
                throw parse_error("line " + std::to_string(lineno) + ": vertex out of range");
            if (j > 0 && e[static_cast<std::size_t>(j - 1)] >= v)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": vertices must be strictly increasing");
        }
        h.edges.push_back(std::move(e));
    }
    return h;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream is(text);
    return parse_hypergraph(is);
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream os;
    os << h.n << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        os << e.size();
        for (int v : e) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::vector<int> induced_edges(const Hypergraph& h, const std::vector<int>& x) {
    std::vector<char> in_x(static_cast<std::size_t>(h.n) + 1, 0);
    for (int v : x) {
        require(v >= 1 && v <= h.n, "induced_edges: vertex out of range");
        in_x[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        bool inside = true;
        for (int v : h.edges[i])
            if (!in_x[static_cast<std::size_t>(v)]) { inside = false; break; }
        if (inside) out.push_back(static_cast<int>(i));
    }
    return out;
}

mpz_class ceil_rational(const mpq_class& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

CloneResult clone_hypergraph(const Hypergraph& h, int k) {
    require(k >= 1, "clone factor must be >= 1");
    h.validate();
    CloneResult r;
    r.k = k;
    r.clone.n = h.n * k;
    r.clone.edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::vector<int> ce;
        ce.reserve(e.size() * static_cast<std::size_t>(k));
        for (int v : e)
            for (int c = 1; c <= k; ++c) ce.push_back(r.to_clone(v, c));
        r.clone.edges.push_back(std::move(ce));
    }
    return r;
}

} // namespace hypat
