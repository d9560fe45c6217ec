#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "multigrade/chain.hpp"

namespace multigrade {

// Necessary divisibility conditions for a degree-k chain on {1..n} with j
// equal-size sets: j | n and j | sum(i^r) for every r = 1..k. A false return
// proves no chain exists, so the scan may skip n.
bool feasibility_filter(std::int64_t n, int j, int k);

struct SearchOptions {
    // hard cap on committed placements; the search stops exactly there
    std::optional<std::uint64_t> node_budget;
    // how many top-level branches may run concurrently (<=1 means sequential);
    // results, including nodes_explored, are identical for every width
    int parallel_width = 1;
    // on by default; off exists to demonstrate that symmetry breaking changes
    // node counts but never the set of canonical chains found
    bool symmetry_breaking = true;
};

struct FindResult {
    std::optional<Chain> chain; // first complete assignment, canonicalized
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

// Decision search: backtracking assignment of n..1 into j sets of capacity
// n/j against the exact per-set targets T_r = sum(i^r)/j. Prunes a set once
// its partial r-th power sum exceeds T_r or can no longer reach T_r with its
// remaining capacity filled by the largest remaining element. Symmetry
// breaking: a new set is opened only in index order.
FindResult find_chain(std::int64_t n, int j, int k, const SearchOptions& opts = {});

struct CountResult {
    std::uint64_t count = 0;     // distinct canonical chains
    std::vector<Chain> chains;   // lexicographic canonical order
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

// Same traversal with no early exit: every canonical chain on {1..n}.
CountResult count_chains(std::int64_t n, int j, int k, const SearchOptions& opts = {});

struct SearchConfig {
    int j = 2;
    int k = 1;
    std::int64_t n_max = 0;
    std::optional<std::uint64_t> node_budget;
    int parallel_width = 1;
};

enum class SearchStatus {
    found,             // witness at found_n
    not_found,         // every multiple of j up to n_max ruled out
    budget_exhausted,  // stopped mid-scan; partial progress reported
};

struct SearchResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<std::int64_t> found_n;
    std::optional<Chain> witness;
    std::uint64_t nodes_explored = 0;
    // multiples of j rejected by divisibility alone
    std::int64_t candidates_filtered = 0;
    // largest n whose processing completed without a witness
    std::int64_t last_n_completed = 0;
};

// Scans n = j, 2j, 3j, ... <= n_max in increasing order, filtering by
// divisibility and running find_chain on the survivors. Deterministic for a
// given config regardless of parallel_width.
SearchResult search_min_n(const SearchConfig& config);

} // namespace multigrade
