#pragma once

// Test-only helpers: independent oracles and random input generators. None of
// this reuses the library's search or enumeration machinery; the oracles are
// deliberately naive so they can stand as references for it.

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multigrade/chain.hpp"
#include "multigrade/construct.hpp"

namespace testsupport {

using multigrade::Chain;
using multigrade::Elem;

// plain repeated multiplication; inputs in tests are small enough that raw
// __int128 cannot wrap
inline __int128 naive_power_sum(const std::vector<Elem>& values, int r) {
    __int128 sum = 0;
    for (Elem v : values) {
        __int128 p = 1;
        for (int i = 0; i < r; ++i) p *= v;
        sum += p;
    }
    return sum;
}

// Enumerates every partition of {1..n} into j sets of size n/j exactly once
// (values ascending; an empty set may be opened only in index order) with no
// power-sum pruning at all, then keeps the partitions whose sets agree on all
// power sums r = 1..k. Leaves arrive canonical: each set is filled in
// ascending order and sets are ordered by their minimum.
inline std::vector<Chain> oracle_chains(std::int64_t n, int j, int k) {
    std::vector<Chain> found;
    if (n < 1 || n % j != 0) return found;
    const std::int64_t cap = n / j;

    std::vector<std::vector<Elem>> sets(static_cast<std::size_t>(j));
    auto leaf_ok = [&]() {
        for (int r = 1; r <= k; ++r) {
            __int128 first = naive_power_sum(sets[0], r);
            for (int t = 1; t < j; ++t)
                if (naive_power_sum(sets[static_cast<std::size_t>(t)], r) != first)
                    return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::int64_t v) -> void {
        if (v > n) {
            if (leaf_ok()) found.push_back(multigrade::make_chain(k, sets));
            return;
        }
        for (int t = 0; t < j; ++t) {
            auto& set = sets[static_cast<std::size_t>(t)];
            if (static_cast<std::int64_t>(set.size()) == cap) continue;
            if (set.empty() && t > 0 &&
                sets[static_cast<std::size_t>(t - 1)].empty())
                break;
            set.push_back(v);
            self(self, v + 1);
            set.pop_back();
        }
    };
    rec(rec, 1);

    std::sort(found.begin(), found.end(),
              [](const Chain& a, const Chain& b) { return a.sets < b.sets; });
    return found;
}

// ---- random generators for the property suites ----

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    std::int64_t uniform64(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
    }
};

// arbitrary well-formed chain: small j/s, entries in [-20, 20], distinct per set
inline Chain random_chain(Rng& rng) {
    const int j = rng.uniform(2, 4);
    const int s = rng.uniform(1, 5);
    std::vector<std::vector<Elem>> sets;
    sets.reserve(static_cast<std::size_t>(j));
    for (int v = 0; v < j; ++v) {
        std::vector<Elem> set;
        while (static_cast<int>(set.size()) < s) {
            Elem x = rng.uniform(-20, 20);
            if (std::find(set.begin(), set.end(), x) == set.end())
                set.push_back(x);
        }
        sets.push_back(std::move(set));
    }
    return multigrade::make_chain(rng.uniform(0, 3), std::move(sets));
}

inline std::vector<int> random_fixed_first_perm(Rng& rng, int j) {
    std::vector<int> p(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(p.begin() + 1, p.end(), rng.gen);
    return p;
}

inline multigrade::PermutationSchedule random_schedule(Rng& rng, int j, int k) {
    std::vector<std::vector<int>> steps;
    for (int i = 0; i < k - 1; ++i) steps.push_back(random_fixed_first_perm(rng, j));
    return multigrade::PermutationSchedule::from_steps(j, std::move(steps));
}

// random form whose N stays within max_n (and within the width policy)
inline multigrade::ConstructionForm random_form(Rng& rng, std::int64_t max_n) {
    for (;;) {
        const int kind = rng.uniform(0, 2);
        const int j = rng.uniform(2, 6);
        const int k = rng.uniform(1, 5);
        const std::int64_t m = rng.uniform(1, 6);
        try {
            multigrade::ConstructionForm form;
            switch (kind) {
            case 0: form = multigrade::ConstructionForm::two_jk(j, k); break;
            case 1: form = multigrade::ConstructionForm::two_mjk(m, j, k); break;
            default: form = multigrade::ConstructionForm::jk1(j, k); break;
            }
            if (form.n() <= max_n) return form;
        } catch (const multigrade::OverflowError&) {
        }
    }
}

// a chain of known degree >= its claimed k: a construction, optionally shaken
// by a degree-preserving affine map
inline Chain random_valid_chain(Rng& rng, std::int64_t max_n, int max_k) {
    for (;;) {
        multigrade::ConstructionForm form = random_form(rng, max_n);
        if (form.k > max_k) continue;
        Chain c = multigrade::construct(form, random_schedule(rng, form.j, form.k));
        if (rng.uniform(0, 1) == 1) {
            Elem mul = 0;
            while (mul == 0) mul = rng.uniform(-3, 3);
            c = multigrade::affine_map(c, mul, rng.uniform(-10, 10));
        }
        return c;
    }
}

inline void fail(const std::string& prop, const std::string& detail) {
    throw std::runtime_error(prop + ": " + detail);
}

// ---- the property suites (criterion-level trial counts) ----

inline void prop_power_sum_oracle(int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int len = rng.uniform(0, 8);
        std::vector<Elem> values;
        values.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) values.push_back(rng.uniform(-50, 50));
        const int r = rng.uniform(1, 6);
        if (multigrade::power_sum(values, r).raw() != naive_power_sum(values, r))
            fail("power_sum-oracle", "mismatch at trial " + std::to_string(t));
    }
}

inline void prop_affine_invariance(int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Chain c = rng.uniform(0, 1) == 0 ? random_chain(rng)
                                         : random_valid_chain(rng, 200, 3);
        Elem mul = 0;
        while (mul == 0) mul = rng.uniform(-10, 10);
        const Elem shift = rng.uniform(-10, 10);
        const int k_max = rng.uniform(1, 3);
        const int before = multigrade::verify(c, k_max).equal_up_to;
        const int after =
            multigrade::verify(multigrade::affine_map(c, mul, shift), k_max)
                .equal_up_to;
        if (after < before)
            fail("affine-invariance",
                 "degree dropped from " + std::to_string(before) + " to " +
                     std::to_string(after) + " at trial " + std::to_string(t));
    }
}

inline void prop_lift_degree(int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Chain c = random_valid_chain(rng, 200, 3);
        std::vector<Elem> offsets;
        while (static_cast<int>(offsets.size()) < c.j) {
            Elem h = rng.uniform(-10, 10);
            if (std::find(offsets.begin(), offsets.end(), h) == offsets.end())
                offsets.push_back(h);
        }
        try {
            Chain lifted = multigrade::lift(c, offsets);
            const int got = multigrade::verify(lifted, c.k + 1).equal_up_to;
            if (got < c.k + 1)
                fail("lift-degree", "expected >= " + std::to_string(c.k + 1) +
                                        ", got " + std::to_string(got) +
                                        " at trial " + std::to_string(t));
        } catch (const multigrade::DegenerateLiftError&) {
            // vacuous: the property is conditional on a non-degenerate lift
        }
    }
}

inline void prop_partition_cover(int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        multigrade::ConstructionForm form = random_form(rng, 5000);
        Chain c = multigrade::construct(form, random_schedule(rng, form.j, form.k));
        auto rep = multigrade::verify(c, form.k);
        if (!rep.covers_1_to_n || rep.n != form.n())
            fail("partition-cover", std::string("not a partition of 1..N for ") +
                                        form.kind_name() + " at trial " +
                                        std::to_string(t));
        if (rep.equal_up_to < form.k)
            fail("partition-cover", "degree below k at trial " + std::to_string(t));
    }
}

inline void prop_canonicalize(int trials, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Chain c = random_chain(rng);
        Chain canon = multigrade::canonicalize(c);
        if (!multigrade::is_canonical(canon))
            fail("canonicalize", "result not canonical at trial " + std::to_string(t));
        if (multigrade::canonicalize(canon).sets != canon.sets)
            fail("canonicalize", "not idempotent at trial " + std::to_string(t));
        Chain shuffled = c;
        std::shuffle(shuffled.sets.begin(), shuffled.sets.end(), rng.gen);
        for (auto& set : shuffled.sets) std::shuffle(set.begin(), set.end(), rng.gen);
        if (multigrade::canonicalize(shuffled).sets != canon.sets)
            fail("canonicalize",
                 "not invariant under reordering at trial " + std::to_string(t));
    }
}

} // namespace testsupport
