#include "multigrade/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace multigrade {

void validate_chain(const Chain& c) {
    if (c.j < 2)
        throw std::invalid_argument("chain needs at least 2 sets");
    if (c.s < 1)
        throw std::invalid_argument("chain sets must be nonempty");
    if (c.k < 0)
        throw std::invalid_argument("claimed degree must be >= 0");
    if (static_cast<int>(c.sets.size()) != c.j)
        throw std::invalid_argument("set count does not match j");
    std::unordered_set<Elem> seen;
    for (const auto& set : c.sets) {
        if (static_cast<int>(set.size()) != c.s)
            throw std::invalid_argument("all sets must have exactly s entries");
        seen.clear();
        for (Elem v : set) {
            if (!seen.insert(v).second)
                throw std::invalid_argument("duplicate entry within a set");
        }
    }
}

Chain make_chain(int k, std::vector<std::vector<Elem>> sets) {
    Chain c;
    c.j = static_cast<int>(sets.size());
    c.s = sets.empty() ? 0 : static_cast<int>(sets.front().size());
    c.k = k;
    c.sets = std::move(sets);
    validate_chain(c);
    return c;
}

Chain canonicalize(const Chain& c) {
    Chain out = c;
    for (auto& set : out.sets)
        std::sort(set.begin(), set.end());
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

bool is_canonical(const Chain& c) {
    for (const auto& set : c.sets)
        if (!std::is_sorted(set.begin(), set.end())) return false;
    return std::is_sorted(c.sets.begin(), c.sets.end());
}

bool same_chain(const Chain& a, const Chain& b) {
    if (a.j != b.j || a.s != b.s) return false;
    return canonicalize(a).sets == canonicalize(b).sets;
}

bool chain_less(const Chain& a, const Chain& b) {
    return canonicalize(a).sets < canonicalize(b).sets;
}

Int128 power_sum(std::span<const Elem> values, int r) {
    if (r < 1)
        throw std::invalid_argument("power_sum: exponent must be >= 1");
    Int128 sum(0);
    for (Elem v : values)
        sum += checked_pow(Int128(v), r);
    return sum;
}

VerificationReport verify(const Chain& c, int k_max) {
    validate_chain(c);
    if (k_max < 1)
        throw std::invalid_argument("verify: k_max must be >= 1");

    VerificationReport rep;
    rep.j = c.j;
    rep.k_max = k_max;
    rep.n = static_cast<std::int64_t>(c.j) * c.s;

    rep.power_sums.resize(c.j);
    for (int v = 0; v < c.j; ++v) {
        rep.power_sums[v].reserve(k_max);
        for (int r = 1; r <= k_max; ++r)
            rep.power_sums[v].push_back(power_sum(c.sets[v], r));
    }

    rep.equal_up_to = 0;
    for (int r = 1; r <= k_max; ++r) {
        bool all_equal = true;
        for (int v = 1; v < c.j; ++v) {
            if (rep.power_sums[v][r - 1] != rep.power_sums[0][r - 1]) {
                all_equal = false;
                break;
            }
        }
        if (!all_equal) break;
        rep.equal_up_to = r;
    }

    std::vector<Elem> all;
    all.reserve(static_cast<std::size_t>(rep.n));
    for (const auto& set : c.sets)
        all.insert(all.end(), set.begin(), set.end());
    std::sort(all.begin(), all.end());
    rep.covers_1_to_n = true;
    for (std::int64_t i = 0; i < rep.n; ++i) {
        if (all[static_cast<std::size_t>(i)] != i + 1) {
            rep.covers_1_to_n = false;
            break;
        }
    }
    return rep;
}

} // namespace multigrade
