#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "multigrade/chain.hpp"

namespace multigrade {

// Lifting with offsets that collide inside an output set would silently turn
// a set into a multiset; the constructions never hit this, but the public
// operation reports it instead of producing garbage.
class DegenerateLiftError : public std::runtime_error {
public:
    explicit DegenerateLiftError(const std::string& what)
        : std::runtime_error(what) {}
};

// Enumeration refused because the schedule space is larger than the cap.
class EnumerationCapError : public std::runtime_error {
public:
    EnumerationCapError(std::uint64_t required, std::uint64_t cap);
    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

// One of the three closed-form families of chains covering 1..N:
//   two_jk  : N = 2*j^k,     sets of size 2*j^(k-1)   (pair base)
//   two_mjk : N = 2*m*j^k,   sets of size 2*m*j^(k-1) (block base)
//   jk1     : N = j^(k+1),   sets of size j^k         (latin base)
struct ConstructionForm {
    enum class Kind { two_jk, two_mjk, jk1 };

    Kind kind = Kind::two_jk;
    int j = 2;
    int k = 1;
    std::int64_t m = 1; // meaningful for two_mjk only

    static ConstructionForm two_jk(int j, int k);
    static ConstructionForm two_mjk(std::int64_t m, int j, int k);
    static ConstructionForm jk1(int j, int k);

    std::int64_t n() const;        // N covered by the construction
    std::int64_t set_size() const; // n() / j

    // Range checks plus the arithmetic-width policy: n^k * set_size must fit
    // the 128-bit power-sum width, otherwise the form is rejected up front.
    void validate() const;

    const char* kind_name() const;
};

// The k-1 offset permutations applied at the lifting steps. Each step is a
// permutation of {1..j} whose first entry is 1 (the symmetry-breaking device
// that makes distinct schedules give distinct chains).
struct PermutationSchedule {
    std::vector<std::vector<int>> steps;

    // identity permutation (1, 2, ..., j) at each of the k-1 steps
    static PermutationSchedule identity(int j, int k);
    // validates every step; throws std::invalid_argument
    static PermutationSchedule from_steps(int j, std::vector<std::vector<int>> steps);

    std::size_t size() const { return steps.size(); }
};

// Degree-1 bases (the first N integers split into equal-sum sets).
Chain base_pairs(int j);                   // {u, 2j+1-u}, N = 2j
Chain base_blocks(std::int64_t m, int j);  // block u + block (2j+1-u), N = 2mj
Chain base_latin(int j);                   // latin-square split of 1..j^2

// Every entry a becomes mul*a + shift; the degree is preserved.
Chain affine_map(const Chain& c, Elem mul, Elem shift);

// The degree-raising step: j sets of size s become j sets of size j*s, each
// output set v collecting a + offsets[(v+w) mod j] over input sets w. Raises
// the degree from k to k+1. Offsets must be pairwise distinct.
Chain lift(const Chain& c, std::span<const Elem> offsets);

// Runs the full induction: the form's base, then k-1 rounds of
// affine_map(j, -j) followed by lift with the next schedule permutation.
// The result covers 1..n() and is returned canonicalized.
Chain construct(const ConstructionForm& form, const PermutationSchedule& schedule);

struct EnumerateOptions {
    std::uint64_t cap = 10000;      // refuse enumerations needing more schedules
    bool all_permutations = false;  // drop the h1=1 restriction (experiment mode;
                                    // produces the same canonical chains, repeated)
};

struct EnumerationResult {
    // canonical, deduplicated, in order of first emission (schedules are
    // generated in lexicographic order)
    std::vector<Chain> chains;
    std::uint64_t schedule_count = 0;
    std::uint64_t collisions = 0; // schedule_count - distinct chains
};

EnumerationResult enumerate_chains(const ConstructionForm& form,
                                   const EnumerateOptions& opts = {});

} // namespace multigrade
