#pragma once

#include <set>
#include <vector>

namespace hypat::detail {

// Kuhn's augmenting-path bipartite matching. adj[i] lists the right vertices
// reachable from left vertex i; right indices are whatever range the caller
// uses, and match_right must be sized past the largest of them.
struct Matcher {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match_right; // right vertex -> left vertex, -1 free
    std::vector<char> visited;

    Matcher(const std::vector<std::vector<int>>& a, std::size_t right_size)
        : adj(a), match_right(right_size, -1) {}

    bool augment(int e) {
        for (int c : adj[static_cast<std::size_t>(e)]) {
            if (visited[static_cast<std::size_t>(c)]) continue;
            visited[static_cast<std::size_t>(c)] = 1;
            if (match_right[static_cast<std::size_t>(c)] < 0 ||
                augment(match_right[static_cast<std::size_t>(c)])) {
                match_right[static_cast<std::size_t>(c)] = e;
                return true;
            }
        }
        return false;
    }

    bool run(int e) {
        visited.assign(match_right.size(), 0);
        return augment(e);
    }
};

struct HallWitness {
    std::vector<int> left;  // sorted left vertices
    std::vector<int> right; // their joint neighborhood, strictly smaller
};

// Alternating reachability from a left vertex the matching cannot absorb.
inline HallWitness hall_witness(const std::vector<std::vector<int>>& adj,
                                const std::vector<int>& match_right, int stuck_left) {
    std::set<int> left{stuck_left};
    std::set<int> right;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e : left)
            for (int c : adj[static_cast<std::size_t>(e)]) right.insert(c);
        for (int c : right) {
            int owner = match_right[static_cast<std::size_t>(c)];
            if (owner >= 0 && left.insert(owner).second) grew = true;
        }
    }
    HallWitness w;
    w.left.assign(left.begin(), left.end());
    w.right.assign(right.begin(), right.end());
    return w;
}

} // namespace hypat::detail
