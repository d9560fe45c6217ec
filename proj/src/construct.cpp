#include "multigrade/construct.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

namespace multigrade {

EnumerationCapError::EnumerationCapError(std::uint64_t required, std::uint64_t cap)
    : std::runtime_error("enumeration needs " + std::to_string(required) +
                         " schedules, above the cap of " + std::to_string(cap) +
                         "; raise the cap to proceed"),
      required_(required),
      cap_(cap) {}

ConstructionForm ConstructionForm::two_jk(int j, int k) {
    ConstructionForm f;
    f.kind = Kind::two_jk;
    f.j = j;
    f.k = k;
    f.validate();
    return f;
}

ConstructionForm ConstructionForm::two_mjk(std::int64_t m, int j, int k) {
    ConstructionForm f;
    f.kind = Kind::two_mjk;
    f.j = j;
    f.k = k;
    f.m = m;
    f.validate();
    return f;
}

ConstructionForm ConstructionForm::jk1(int j, int k) {
    ConstructionForm f;
    f.kind = Kind::jk1;
    f.j = j;
    f.k = k;
    f.validate();
    return f;
}

std::int64_t ConstructionForm::n() const {
    Int128 jk = checked_pow(Int128(j), k);
    Int128 n;
    switch (kind) {
    case Kind::two_jk:  n = Int128(2) * jk; break;
    case Kind::two_mjk: n = Int128(2) * Int128(m) * jk; break;
    case Kind::jk1:     n = jk * Int128(j); break;
    }
    return n.to_int64();
}

std::int64_t ConstructionForm::set_size() const { return n() / j; }

void ConstructionForm::validate() const {
    if (j < 2)
        throw std::invalid_argument("construction needs j >= 2");
    if (k < 1)
        throw std::invalid_argument("construction needs k >= 1");
    if (kind == Kind::two_mjk && m < 1)
        throw std::invalid_argument("construction needs m >= 1");
    std::int64_t nn = n(); // throws OverflowError if N leaves 64 bits
    std::int64_t s = nn / j;
    if (s > std::numeric_limits<int>::max())
        throw OverflowError("set size too large to materialize");
    // width policy: the largest power sum, bounded by n^k * s, must fit
    (void)(checked_pow(Int128(nn), k) * Int128(s));
}

const char* ConstructionForm::kind_name() const {
    switch (kind) {
    case Kind::two_jk:  return "2jk";
    case Kind::two_mjk: return "2mjk";
    case Kind::jk1:     return "jk1";
    }
    return "?";
}

namespace {

void validate_step(int j, const std::vector<int>& step, bool require_first_fixed) {
    if (static_cast<int>(step.size()) != j)
        throw std::invalid_argument("schedule step must have j entries");
    std::vector<bool> seen(static_cast<std::size_t>(j) + 1, false);
    for (int v : step) {
        if (v < 1 || v > j || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("schedule step must be a permutation of 1..j");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (require_first_fixed && step.front() != 1)
        throw std::invalid_argument("schedule step must keep 1 first");
}

} // namespace

PermutationSchedule PermutationSchedule::identity(int j, int k) {
    if (j < 2 || k < 1)
        throw std::invalid_argument("schedule needs j >= 2 and k >= 1");
    std::vector<int> id(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) id[static_cast<std::size_t>(i)] = i + 1;
    PermutationSchedule s;
    s.steps.assign(static_cast<std::size_t>(k - 1), id);
    return s;
}

PermutationSchedule PermutationSchedule::from_steps(int j,
                                                    std::vector<std::vector<int>> steps) {
    for (const auto& step : steps)
        validate_step(j, step, /*require_first_fixed=*/true);
    PermutationSchedule s;
    s.steps = std::move(steps);
    return s;
}

Chain base_pairs(int j) {
    if (j < 2)
        throw std::invalid_argument("base_pairs needs j >= 2");
    std::vector<std::vector<Elem>> sets;
    sets.reserve(static_cast<std::size_t>(j));
    for (int u = 1; u <= j; ++u)
        sets.push_back({Elem(u), Elem(2 * j + 1 - u)});
    return make_chain(1, std::move(sets));
}

Chain base_blocks(std::int64_t m, int j) {
    if (m < 1)
        throw std::invalid_argument("base_blocks needs m >= 1");
    if (j < 2)
        throw std::invalid_argument("base_blocks needs j >= 2");
    std::int64_t s = checked_mul_i64(2, m);
    (void)checked_mul_i64(s, j); // N = 2mj must stay in 64 bits
    if (s > std::numeric_limits<int>::max())
        throw OverflowError("set size too large to materialize");
    auto block = [m](std::int64_t b) {
        std::vector<Elem> out;
        out.reserve(static_cast<std::size_t>(m));
        for (std::int64_t i = (b - 1) * m + 1; i <= b * m; ++i)
            out.push_back(i);
        return out;
    };
    std::vector<std::vector<Elem>> sets;
    sets.reserve(static_cast<std::size_t>(j));
    for (int u = 1; u <= j; ++u) {
        auto set = block(u);
        auto tail = block(2 * j + 1 - u);
        set.insert(set.end(), tail.begin(), tail.end());
        sets.push_back(std::move(set));
    }
    return make_chain(1, std::move(sets));
}

Chain base_latin(int j) {
    if (j < 2)
        throw std::invalid_argument("base_latin needs j >= 2");
    std::vector<std::vector<Elem>> sets(static_cast<std::size_t>(j));
    for (int v = 1; v <= j; ++v) {
        auto& set = sets[static_cast<std::size_t>(v - 1)];
        set.reserve(static_cast<std::size_t>(j));
        for (int u = 1; u <= j; ++u)
            set.push_back(Elem((v + u - 2) % j) * j + u);
    }
    return make_chain(1, std::move(sets));
}

Chain affine_map(const Chain& c, Elem mul, Elem shift) {
    validate_chain(c);
    if (mul == 0 && c.s > 1)
        throw std::invalid_argument("affine map with M = 0 collapses set entries");
    Chain out = c;
    for (auto& set : out.sets)
        for (auto& v : set)
            v = checked_add_i64(checked_mul_i64(mul, v), shift);
    return out;
}

Chain lift(const Chain& c, std::span<const Elem> offsets) {
    validate_chain(c);
    if (offsets.size() != static_cast<std::size_t>(c.j))
        throw std::invalid_argument("lift needs exactly j offsets");
    {
        std::unordered_set<Elem> distinct(offsets.begin(), offsets.end());
        if (distinct.size() != offsets.size())
            throw std::invalid_argument("lift offsets must be pairwise distinct");
    }

    const std::size_t j = static_cast<std::size_t>(c.j);
    std::vector<std::vector<Elem>> out(j);
    std::unordered_set<Elem> seen;
    for (std::size_t v = 0; v < j; ++v) {
        auto& set = out[v];
        set.reserve(j * static_cast<std::size_t>(c.s));
        for (std::size_t w = 0; w < j; ++w) {
            Elem h = offsets[(v + w) % j];
            for (Elem a : c.sets[w])
                set.push_back(checked_add_i64(a, h));
        }
        seen.clear();
        for (Elem x : set) {
            if (!seen.insert(x).second)
                throw DegenerateLiftError(
                    "lift produced a repeated integer inside one set");
        }
    }
    return make_chain(c.k + 1, std::move(out));
}

namespace {

Chain run_induction(const ConstructionForm& form,
                    std::span<const std::vector<int>> steps) {
    form.validate();
    if (steps.size() != static_cast<std::size_t>(form.k - 1))
        throw std::invalid_argument("schedule must have exactly k-1 steps");

    Chain chain;
    switch (form.kind) {
    case ConstructionForm::Kind::two_jk:  chain = base_pairs(form.j); break;
    case ConstructionForm::Kind::two_mjk: chain = base_blocks(form.m, form.j); break;
    case ConstructionForm::Kind::jk1:     chain = base_latin(form.j); break;
    }

    for (const auto& step : steps) {
        chain = affine_map(chain, form.j, -form.j);
        std::vector<Elem> offsets(step.begin(), step.end());
        chain = lift(chain, offsets);
    }
    return canonicalize(chain);
}

} // namespace

Chain construct(const ConstructionForm& form, const PermutationSchedule& schedule) {
    for (const auto& step : schedule.steps)
        validate_step(form.j, step, /*require_first_fixed=*/true);
    return run_induction(form, schedule.steps);
}

EnumerationResult enumerate_chains(const ConstructionForm& form,
                                   const EnumerateOptions& opts) {
    form.validate();

    // all step permutations, lexicographic
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<std::size_t>(form.j));
        for (int i = 0; i < form.j; ++i) p[static_cast<std::size_t>(i)] = i + 1;
        if (opts.all_permutations) {
            do perms.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
        } else {
            // keep 1 first, permute the tail
            do perms.push_back(p);
            while (std::next_permutation(p.begin() + 1, p.end()));
        }
    }

    const int rounds = form.k - 1;
    unsigned __int128 total = 1;
    for (int i = 0; i < rounds; ++i) {
        total *= perms.size();
        if (total > opts.cap) {
            std::uint64_t req = total > std::numeric_limits<std::uint64_t>::max()
                                    ? std::numeric_limits<std::uint64_t>::max()
                                    : static_cast<std::uint64_t>(total);
            throw EnumerationCapError(req, opts.cap);
        }
    }

    EnumerationResult result;
    result.schedule_count = static_cast<std::uint64_t>(total);

    std::set<std::vector<std::vector<Elem>>> seen;
    std::vector<std::size_t> odo(static_cast<std::size_t>(rounds), 0);
    std::vector<std::vector<int>> steps(static_cast<std::size_t>(rounds));
    for (std::uint64_t idx = 0; idx < result.schedule_count; ++idx) {
        for (int i = 0; i < rounds; ++i)
            steps[static_cast<std::size_t>(i)] = perms[odo[static_cast<std::size_t>(i)]];
        Chain chain = run_induction(form, steps);
        if (seen.insert(chain.sets).second)
            result.chains.push_back(std::move(chain));
        // odometer: last step varies fastest, so emission is lexicographic
        for (int i = rounds - 1; i >= 0; --i) {
            auto& d = odo[static_cast<std::size_t>(i)];
            if (++d < perms.size()) break;
            d = 0;
        }
    }
    result.collisions = result.schedule_count - result.chains.size();
    return result;
}

} // namespace multigrade
