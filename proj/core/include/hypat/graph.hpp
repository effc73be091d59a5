#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypat {

// Vertices are 1..n; edges are distinct unordered pairs stored as (u < v).
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    void validate() const; // throws std::invalid_argument on loops/parallels/bad labels
    int degree(int v) const;
    std::vector<int> incident_edges(int v) const; // 0-based edge indices
    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const;
    bool connected() const; // true for n <= 1
};

// Text format: "n m" then m lines "u v" (1-based, u != v, no repeats).
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph(const std::string& text);
std::string format_graph(const SimpleGraph& g);

// True when some matching covers every vertex (bitmask DP; requires n <= 24).
bool has_perfect_matching(const SimpleGraph& g);

} // namespace hypat
