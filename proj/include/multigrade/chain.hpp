#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multigrade/int128.hpp"

namespace multigrade {

using Elem = std::int64_t;

// A multigrade chain: j sets of s integers whose r-th power sums agree for
// r = 1..k. k is the *claimed* degree carried with the data; verify()
// establishes the actual one.
//
// Invariants (see validate_chain): j >= 2, s >= 1, every set has exactly s
// entries, no entry repeats within a set. Entries may repeat across sets;
// chains over arbitrary integers are accepted, not just 1..N.
struct Chain {
    int j = 0;
    int s = 0;
    int k = 0;
    std::vector<std::vector<Elem>> sets;
};

// Builds a chain from its sets, deriving j and s. Throws std::invalid_argument
// on any invariant violation.
Chain make_chain(int k, std::vector<std::vector<Elem>> sets);

void validate_chain(const Chain& c);

// Sorts each set ascending and orders sets by smallest element (ties broken
// lexicographically, which matters only for chains whose sets overlap).
// Canonical form is the identity used for equality and deduplication.
Chain canonicalize(const Chain& c);

bool is_canonical(const Chain& c);

// Equality / ordering of canonical forms. Both ignore the claimed k.
bool same_chain(const Chain& a, const Chain& b);
bool chain_less(const Chain& a, const Chain& b);

// Sum of r-th powers, exact. r >= 1; an empty span sums to 0.
Int128 power_sum(std::span<const Elem> values, int r);

struct VerificationReport {
    int j = 0;
    int k_max = 0;
    // power_sums[v][r-1] = sum of r-th powers of set v, r = 1..k_max
    std::vector<std::vector<Int128>> power_sums;
    // largest r' such that all sets agree on every exponent 1..r' (0 if they
    // already differ at r = 1)
    int equal_up_to = 0;
    // true iff the multiset union of the sets is exactly {1, 2, ..., n}
    bool covers_1_to_n = false;
    std::int64_t n = 0; // the cover bound j*s
};

// Fills the j x k_max power-sum table and derives equal_up_to and the cover
// flag. k_max >= 1.
VerificationReport verify(const Chain& c, int k_max);

} // namespace multigrade
