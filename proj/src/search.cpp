#include "multigrade/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace multigrade {

namespace {

constexpr std::uint64_t kNoBudget = std::numeric_limits<std::uint64_t>::max();

void validate_instance_params(std::int64_t n, int j, int k) {
    if (n < 1)
        throw std::invalid_argument("search needs n >= 1");
    if (j < 2)
        throw std::invalid_argument("search needs j >= 2");
    if (k < 1)
        throw std::invalid_argument("search needs k >= 1");
}

// Read-only data for one (n, j, k) instance: power table and per-set targets.
// Setup runs fully checked; afterwards the hot loop may use raw __int128
// because every partial sum is bounded by sum(i^r) and every lower-bound
// product by s_cap * n^k, both verified to fit here.
struct Instance {
    std::int64_t n;
    int j;
    int k;
    std::int64_t s_cap;
    bool symmetry;
    std::vector<__int128> pw;      // pw[v*k + r-1] = v^r, row 0 is zeros
    std::vector<__int128> target;  // T_r = sum(i^r) / j

    Instance(std::int64_t n_, int j_, int k_, bool symmetry_)
        : n(n_), j(j_), k(k_), s_cap(n_ / j_), symmetry(symmetry_) {
        pw.assign(static_cast<std::size_t>(n + 1) * k, 0);
        std::vector<Int128> totals(static_cast<std::size_t>(k), Int128(0));
        for (std::int64_t v = 1; v <= n; ++v) {
            Int128 p(1);
            for (int r = 0; r < k; ++r) {
                p *= Int128(v);
                pw[static_cast<std::size_t>(v) * k + r] = p.raw();
                totals[static_cast<std::size_t>(r)] += p;
            }
        }
        target.resize(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r) {
            __int128 s = totals[static_cast<std::size_t>(r)].raw();
            if (s % j != 0)
                throw std::invalid_argument("targets not divisible by j");
            target[static_cast<std::size_t>(r)] = s / j;
            // bound for partial + cap * v^r in the prune check
            (void)(totals[static_cast<std::size_t>(r)] +
                   Int128(s_cap) * Int128::from_raw(powers_of(n)[r]));
        }
    }

    const __int128* powers_of(std::int64_t v) const {
        return &pw[static_cast<std::size_t>(v) * k];
    }
};

struct State {
    std::vector<std::int64_t> set_count;
    std::vector<__int128> partial; // partial[t*k + r-1]
    std::vector<std::vector<Elem>> sets;

    explicit State(const Instance& inst)
        : set_count(static_cast<std::size_t>(inst.j), 0),
          partial(static_cast<std::size_t>(inst.j) * inst.k, 0),
          sets(static_cast<std::size_t>(inst.j)) {
        for (auto& s : sets) s.reserve(static_cast<std::size_t>(inst.s_cap));
    }
};

// After placing v, can any set still reach its targets with elements <= v-1?
// The set just touched also gets the upper check; untouched sets cannot have
// newly exceeded a target.
bool pruned_after(const Instance& inst, const State& st, int touched,
                  std::int64_t vnext) {
    const int k = inst.k;
    const __int128* pnext = inst.powers_of(vnext);
    for (int u = 0; u < inst.j; ++u) {
        const __int128* part = &st.partial[static_cast<std::size_t>(u) * k];
        const __int128 cap = inst.s_cap - st.set_count[static_cast<std::size_t>(u)];
        for (int r = 0; r < k; ++r) {
            if (u == touched && part[r] > inst.target[static_cast<std::size_t>(r)])
                return true;
            if (part[r] + cap * pnext[r] < inst.target[static_cast<std::size_t>(r)])
                return true;
        }
    }
    return false;
}

enum class Mode { find_first, count_all };

struct BranchOutcome {
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool aborted = false;
    std::vector<Chain> chains;              // discovery order, canonical
    std::vector<std::uint64_t> found_at;    // branch-local node index per find
};

// Depth-first traversal of one top-level branch. Node = a committed placement
// of one value into one set; the budget is checked before every commit.
class Runner {
public:
    Runner(const Instance& inst, const State& start, Mode mode,
           std::uint64_t budget, const std::atomic<std::size_t>* winner,
           std::size_t branch_index)
        : inst_(inst), st_(start), mode_(mode), budget_(budget),
          winner_(winner), branch_index_(branch_index) {}

    BranchOutcome run(std::int64_t first_value, int first_set) {
        place(first_value, first_set);
        return std::move(out_);
    }

private:
    // returns true when the traversal must stop (found/budget/abort)
    bool place(std::int64_t v, int t) {
        if (out_.nodes == budget_) {
            out_.budget_hit = true;
            return true;
        }
        ++out_.nodes;
        if (winner_ && (out_.nodes & 1023) == 0 &&
            winner_->load(std::memory_order_relaxed) < branch_index_) {
            out_.aborted = true;
            return true;
        }

        const int k = inst_.k;
        const __int128* pv = inst_.powers_of(v);
        __int128* part = &st_.partial[static_cast<std::size_t>(t) * k];
        for (int r = 0; r < k; ++r) part[r] += pv[r];
        ++st_.set_count[static_cast<std::size_t>(t)];
        st_.sets[static_cast<std::size_t>(t)].push_back(v);

        bool stop = false;
        if (!pruned_after(inst_, st_, t, v - 1)) {
            if (v == 1)
                stop = record_complete();
            else
                stop = descend(v - 1);
        }

        st_.sets[static_cast<std::size_t>(t)].pop_back();
        --st_.set_count[static_cast<std::size_t>(t)];
        for (int r = 0; r < k; ++r) part[r] -= pv[r];
        return stop;
    }

    bool descend(std::int64_t v) {
        for (int t = 0; t < inst_.j; ++t) {
            const std::size_t ut = static_cast<std::size_t>(t);
            if (st_.set_count[ut] == inst_.s_cap) continue;
            if (inst_.symmetry && st_.set_count[ut] == 0) {
                if (t > 0 && st_.set_count[ut - 1] == 0)
                    break; // only the first empty set may be opened
            }
            if (place(v, t)) return true;
        }
        return false;
    }

    bool record_complete() {
        out_.chains.push_back(canonicalize(make_chain(inst_.k, st_.sets)));
        out_.found_at.push_back(out_.nodes);
        return mode_ == Mode::find_first;
    }

    const Instance& inst_;
    State st_;
    Mode mode_;
    std::uint64_t budget_;
    const std::atomic<std::size_t>* winner_;
    std::size_t branch_index_;
    BranchOutcome out_;
};

// Reconstructs the sequential traversal from per-branch outcomes, walking
// branches in order. Produces bit-identical results for any parallel width,
// including exact node counts under a budget.
struct Merge {
    Mode mode;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool stopped = false;
    std::optional<Chain> first_found;
    std::vector<Chain> all_chains;

    // returns false once no further branches are needed
    bool feed(const BranchOutcome& o) {
        const std::uint64_t rem = budget == kNoBudget ? kNoBudget : budget - nodes;
        if (mode == Mode::find_first) {
            if (!o.chains.empty() && o.found_at.front() <= rem) {
                first_found = o.chains.front();
                nodes += o.found_at.front();
                stopped = true;
                return false;
            }
            if (o.chains.empty() && !o.budget_hit && o.nodes <= rem) {
                nodes += o.nodes;
                return true;
            }
            nodes = budget;
            exhausted = true;
            stopped = true;
            return false;
        }
        if (!o.budget_hit && o.nodes <= rem) {
            all_chains.insert(all_chains.end(), o.chains.begin(), o.chains.end());
            nodes += o.nodes;
            return true;
        }
        for (std::size_t i = 0; i < o.chains.size(); ++i)
            if (o.found_at[i] <= rem) all_chains.push_back(o.chains[i]);
        nodes = budget;
        exhausted = true;
        stopped = true;
        return false;
    }
};

struct RawSearch {
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::optional<Chain> first_found;
    std::vector<Chain> chains;
};

RawSearch run_search(const Instance& inst, Mode mode, std::uint64_t budget,
                     int parallel_width) {
    Merge merge{mode, budget};

    // Shared root: with symmetry breaking the largest value is forced into
    // set 1, which is the first committed node.
    State root(inst);
    bool root_ok = true;
    if (inst.symmetry) {
        if (budget == 0) {
            merge.exhausted = true;
            RawSearch out;
            out.exhausted = true;
            return out;
        }
        merge.nodes = 1;
        const __int128* pv = inst.powers_of(inst.n);
        for (int r = 0; r < inst.k; ++r) root.partial[static_cast<std::size_t>(r)] += pv[r];
        root.set_count[0] = 1;
        root.sets[0].push_back(inst.n);
        root_ok = !pruned_after(inst, root, 0, inst.n - 1);
        if (inst.n == 1) root_ok = false; // unreachable: n >= j >= 2
    }

    // Top-level branches: the placements of the next value, in set order.
    std::int64_t branch_value = inst.symmetry ? inst.n - 1 : inst.n;
    std::vector<int> branch_sets;
    if (root_ok) {
        for (int t = 0; t < inst.j; ++t) {
            const std::size_t ut = static_cast<std::size_t>(t);
            if (root.set_count[ut] == inst.s_cap) continue;
            if (inst.symmetry && root.set_count[ut] == 0 && t > 0 &&
                root.set_count[ut - 1] == 0)
                break;
            branch_sets.push_back(t);
        }
    }

    const std::size_t nbranches = branch_sets.size();
    if (parallel_width <= 1 || nbranches <= 1) {
        for (std::size_t b = 0; b < nbranches; ++b) {
            const std::uint64_t rem =
                budget == kNoBudget ? kNoBudget : budget - merge.nodes;
            Runner runner(inst, root, mode, rem, nullptr, b);
            BranchOutcome o = runner.run(branch_value, branch_sets[b]);
            if (!merge.feed(o)) break;
        }
    } else {
        std::vector<BranchOutcome> outcomes(nbranches);
        const std::uint64_t local =
            budget == kNoBudget ? kNoBudget : budget - merge.nodes;
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
        auto work = [&] {
            for (;;) {
                const std::size_t b = next.fetch_add(1);
                if (b >= nbranches) return;
                if (mode == Mode::find_first &&
                    winner.load(std::memory_order_relaxed) < b) {
                    outcomes[b].aborted = true;
                    continue;
                }
                Runner runner(inst, root, mode, local,
                              mode == Mode::find_first ? &winner : nullptr, b);
                outcomes[b] = runner.run(branch_value, branch_sets[b]);
                if (mode == Mode::find_first && !outcomes[b].chains.empty()) {
                    std::size_t cur = winner.load();
                    while (b < cur && !winner.compare_exchange_weak(cur, b)) {
                    }
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            const std::size_t nthreads =
                std::min<std::size_t>(static_cast<std::size_t>(parallel_width),
                                      nbranches);
            pool.reserve(nthreads);
            for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(work);
        }
        for (std::size_t b = 0; b < nbranches; ++b)
            if (!merge.feed(outcomes[b])) break;
    }

    RawSearch out;
    out.nodes = merge.nodes;
    out.exhausted = merge.exhausted;
    out.first_found = std::move(merge.first_found);
    out.chains = std::move(merge.all_chains);
    return out;
}

} // namespace

bool feasibility_filter(std::int64_t n, int j, int k) {
    validate_instance_params(n, j, k);
    if (n % j != 0) return false;
    std::vector<Int128> totals(static_cast<std::size_t>(k), Int128(0));
    for (std::int64_t v = 1; v <= n; ++v) {
        Int128 p(1);
        for (int r = 0; r < k; ++r) {
            p *= Int128(v);
            totals[static_cast<std::size_t>(r)] += p;
        }
    }
    for (int r = 0; r < k; ++r)
        if (totals[static_cast<std::size_t>(r)].raw() % j != 0) return false;
    return true;
}

FindResult find_chain(std::int64_t n, int j, int k, const SearchOptions& opts) {
    validate_instance_params(n, j, k);
    FindResult result;
    if (!feasibility_filter(n, j, k)) return result;
    Instance inst(n, j, k, opts.symmetry_breaking);
    RawSearch raw = run_search(inst, Mode::find_first,
                               opts.node_budget.value_or(kNoBudget),
                               opts.parallel_width);
    result.chain = std::move(raw.first_found);
    result.nodes_explored = raw.nodes;
    result.budget_exhausted = raw.exhausted;
    return result;
}

CountResult count_chains(std::int64_t n, int j, int k, const SearchOptions& opts) {
    validate_instance_params(n, j, k);
    CountResult result;
    if (!feasibility_filter(n, j, k)) return result;
    Instance inst(n, j, k, opts.symmetry_breaking);
    RawSearch raw = run_search(inst, Mode::count_all,
                               opts.node_budget.value_or(kNoBudget),
                               opts.parallel_width);
    result.nodes_explored = raw.nodes;
    result.budget_exhausted = raw.exhausted;

    // without symmetry breaking the same partition is reached under several
    // set labelings; identify chains by canonical form
    std::set<std::vector<std::vector<Elem>>> seen;
    for (auto& c : raw.chains)
        if (seen.insert(c.sets).second) result.chains.push_back(std::move(c));
    std::sort(result.chains.begin(), result.chains.end(),
              [](const Chain& a, const Chain& b) { return a.sets < b.sets; });
    result.count = result.chains.size();
    return result;
}

SearchResult search_min_n(const SearchConfig& config) {
    if (config.j < 2 || config.k < 1)
        throw std::invalid_argument("search needs j >= 2 and k >= 1");
    if (config.n_max < config.j)
        throw std::invalid_argument("search needs n_max >= j");

    SearchResult result;
    const std::uint64_t budget = config.node_budget.value_or(kNoBudget);
    for (std::int64_t n = config.j; n <= config.n_max; n += config.j) {
        if (!feasibility_filter(n, config.j, config.k)) {
            ++result.candidates_filtered;
            result.last_n_completed = n;
            continue;
        }
        SearchOptions opts;
        if (budget != kNoBudget) opts.node_budget = budget - result.nodes_explored;
        opts.parallel_width = config.parallel_width;
        FindResult fr = find_chain(n, config.j, config.k, opts);
        result.nodes_explored += fr.nodes_explored;
        if (fr.budget_exhausted) {
            result.status = SearchStatus::budget_exhausted;
            return result;
        }
        if (fr.chain) {
            result.status = SearchStatus::found;
            result.found_n = n;
            result.witness = std::move(fr.chain);
            return result;
        }
        result.last_n_completed = n;
    }
    result.status = SearchStatus::not_found;
    return result;
}

} // namespace multigrade
