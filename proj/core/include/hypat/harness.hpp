#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypat/polynomial.hpp"

namespace hypat {

// Seed-reproducible system: m hyperedges of size 2..max_edge_size on n
// vertices, coefficients uniform over a small nonzero pool suited to the field
// ({1, -1, 2, -2} plus low roots of unity or the matching residues).
LinearSystem random_instance(std::uint64_t seed, int n, int m, int max_edge_size,
                             const FieldDescriptor& field);

struct SearchRecord {
    int index = 0;
    std::string instance; // self-contained serialization; reparses to the system
    mpq_class ed;
    int at = 0;
    int bound = 0; // 2 * ceil(ed) + 1
    bool violation = false;
};

struct SearchConfig {
    std::uint64_t seed = 1;
    int instances = 100;
    int n = 6;
    int m = 8;
    int max_edge_size = 4;
    FieldDescriptor field = FieldDescriptor::rational();
    std::size_t term_budget = kDefaultTermBudget;
    bool balanced = false; // all-ones coefficients instead of random ones
};

struct SearchSummary {
    std::vector<SearchRecord> records; // instance order; skipped ones excluded
    std::vector<int> skipped;          // indices whose expansion blew the budget
    int violations = 0;
};

// Streams through seeded instances comparing the Alon-Tarsi number against
// 2*ceil(ed)+1. A would-be violation is recomputed from scratch (reparsed
// serialization, the other density routine, fresh expansion) before counting.
SearchSummary conjecture_search(const SearchConfig& cfg);

} // namespace hypat
