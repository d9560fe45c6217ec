#include <doctest.h>

#include "multigrade/construct.hpp"
#include "multigrade/fixtures.hpp"
#include "multigrade/search.hpp"

#include "support.hpp"

using namespace multigrade;

using Sets = std::vector<std::vector<Elem>>;

TEST_CASE("feasibility_filter") {
    CHECK(feasibility_filter(18, 3, 2));
    CHECK_FALSE(feasibility_filter(8, 3, 1)); // 3 does not divide 8
    CHECK(feasibility_filter(9, 3, 1));
    CHECK(feasibility_filter(8, 2, 2)); // 36 and 204 both even
    CHECK_FALSE(feasibility_filter(12, 3, 2)); // 650 not divisible by 3
    CHECK_FALSE(feasibility_filter(6, 3, 2));  // 91 not divisible by 3
    CHECK(feasibility_filter(4, 2, 2)); // necessary, not sufficient
    CHECK_FALSE(feasibility_filter(2, 2, 1)); // sum 3 is odd
    CHECK_THROWS_AS(feasibility_filter(0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(feasibility_filter(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(feasibility_filter(4, 2, 0), std::invalid_argument);
}

TEST_CASE("find_chain on the documented instances") {
    auto r8 = find_chain(8, 2, 2);
    REQUIRE(r8.chain.has_value());
    CHECK(r8.chain->sets == Sets{{1, 4, 6, 7}, {2, 3, 5, 8}});
    CHECK_FALSE(r8.budget_exhausted);

    auto r12 = find_chain(12, 2, 3);
    CHECK_FALSE(r12.chain.has_value());
    CHECK_FALSE(r12.budget_exhausted);

    auto r6 = find_chain(6, 3, 1);
    REQUIRE(r6.chain.has_value());
    CHECK(r6.chain->sets == Sets{{1, 6}, {2, 5}, {3, 4}});

    // the filter already rules this one out
    auto r83 = find_chain(8, 3, 1);
    CHECK_FALSE(r83.chain.has_value());
    CHECK(r83.nodes_explored == 0);
}

TEST_CASE("find_chain witnesses always verify") {
    const int cases[][3] = {{8, 2, 2}, {16, 2, 3}, {18, 3, 2}, {9, 3, 1}};
    for (const auto& c : cases) {
        const int n = c[0], j = c[1], k = c[2];
        auto r = find_chain(n, j, k);
        REQUIRE(r.chain.has_value());
        auto rep = verify(*r.chain, k);
        CHECK(rep.equal_up_to >= k);
        CHECK(rep.covers_1_to_n);
        CHECK(rep.n == n);
    }
}

TEST_CASE("count_chains exact values") {
    auto c8 = count_chains(8, 2, 2);
    CHECK(c8.count == 1);
    CHECK(c8.chains[0].sets == Sets{{1, 4, 6, 7}, {2, 3, 5, 8}});

    CHECK(count_chains(12, 2, 2).count == 1);
    CHECK(count_chains(16, 2, 2).count == 7);
    CHECK(count_chains(12, 2, 3).count == 0);
    CHECK(count_chains(6, 3, 1).count == 1);
    CHECK(count_chains(6, 3, 1).chains[0].sets == Sets{{1, 6}, {2, 5}, {3, 4}});

    // the unique degree-3 split of 1..16 is the one the pair-base
    // construction produces
    auto c16 = count_chains(16, 2, 3);
    REQUIRE(c16.count == 1);
    Chain built = construct(ConstructionForm::two_jk(2, 3),
                            PermutationSchedule::identity(2, 3));
    CHECK(c16.chains[0].sets == built.sets);
}

TEST_CASE("count_chains at 18 finds all nine, including both fixtures") {
    auto r = count_chains(18, 3, 2);
    CHECK(r.count == 9);
    CHECK_FALSE(r.budget_exhausted);
    bool has_a = false, has_b = false;
    for (const auto& c : r.chains) {
        auto rep = verify(c, 2);
        CHECK(rep.equal_up_to >= 2);
        CHECK(rep.covers_1_to_n);
        has_a = has_a || c.sets == find_fixture("18a")->chain.sets;
        has_b = has_b || c.sets == find_fixture("18b")->chain.sets;
    }
    CHECK(has_a);
    CHECK(has_b);
    // lexicographic canonical order
    for (std::size_t i = 1; i < r.chains.size(); ++i)
        CHECK(r.chains[i - 1].sets < r.chains[i].sets);
}

TEST_CASE("count_chains matches the no-pruning oracle on small instances") {
    for (std::int64_t n : {4, 6, 8, 9, 10, 12}) {
        for (int j : {2, 3}) {
            for (int k : {1, 2}) {
                auto got = count_chains(n, j, k);
                auto expected = testsupport::oracle_chains(n, j, k);
                CHECK(got.count == expected.size());
                REQUIRE(got.chains.size() == expected.size());
                for (std::size_t i = 0; i < expected.size(); ++i)
                    CHECK(got.chains[i].sets == expected[i].sets);
            }
        }
    }
}

TEST_CASE("search_min_n reproduces the proved minimal values") {
    SearchConfig c22{2, 2, 16, std::nullopt, 1};
    auto r22 = search_min_n(c22);
    CHECK(r22.status == SearchStatus::found);
    CHECK(r22.found_n == 8);
    CHECK(r22.witness->sets == Sets{{1, 4, 6, 7}, {2, 3, 5, 8}});

    SearchConfig c32{3, 2, 18, std::nullopt, 1};
    auto r32 = search_min_n(c32);
    CHECK(r32.status == SearchStatus::found);
    CHECK(r32.found_n == 18);
    CHECK(r32.candidates_filtered == 4); // 3, 6, 12, 15
    CHECK(verify(*r32.witness, 2).equal_up_to >= 2);
    CHECK(verify(*r32.witness, 2).covers_1_to_n);

    SearchConfig c41{4, 1, 12, std::nullopt, 1};
    auto r41 = search_min_n(c41);
    CHECK(r41.found_n == 8);
    CHECK(r41.witness->sets == Sets{{1, 8}, {2, 7}, {3, 6}, {4, 5}});
}

TEST_CASE("search_min_n scan semantics") {
    SearchConfig below{2, 3, 12, std::nullopt, 1};
    auto r = search_min_n(below);
    CHECK(r.status == SearchStatus::not_found);
    CHECK_FALSE(r.found_n.has_value());
    CHECK(r.last_n_completed == 12);

    SearchConfig at{2, 3, 16, std::nullopt, 1};
    auto r16 = search_min_n(at);
    CHECK(r16.found_n == 16); // 2*j^k, consistent with the conjectured minimum

    CHECK_THROWS_AS(search_min_n(SearchConfig{1, 1, 10, std::nullopt, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_min_n(SearchConfig{3, 1, 2, std::nullopt, 1}),
                    std::invalid_argument);
}

TEST_CASE("node budget is honored exactly") {
    auto full = find_chain(18, 3, 2);
    REQUIRE(full.chain.has_value());
    REQUIRE(full.nodes_explored > 10);

    SearchOptions tight;
    tight.node_budget = full.nodes_explored - 1;
    auto cut = find_chain(18, 3, 2, tight);
    CHECK_FALSE(cut.chain.has_value());
    CHECK(cut.budget_exhausted);
    CHECK(cut.nodes_explored == full.nodes_explored - 1);

    SearchOptions exact;
    exact.node_budget = full.nodes_explored;
    auto fit = find_chain(18, 3, 2, exact);
    CHECK(fit.chain.has_value());
    CHECK_FALSE(fit.budget_exhausted);
    CHECK(fit.nodes_explored == full.nodes_explored);

    SearchOptions zero;
    zero.node_budget = 0;
    auto none = find_chain(18, 3, 2, zero);
    CHECK(none.budget_exhausted);
    CHECK(none.nodes_explored == 0);

    auto cfull = count_chains(12, 2, 2);
    SearchOptions half;
    half.node_budget = cfull.nodes_explored / 2;
    auto chalf = count_chains(12, 2, 2, half);
    CHECK(chalf.budget_exhausted);
    CHECK(chalf.nodes_explored == cfull.nodes_explored / 2);
    CHECK(chalf.count <= cfull.count);
    SearchOptions loose;
    loose.node_budget = cfull.nodes_explored + 1000;
    auto cloose = count_chains(12, 2, 2, loose);
    CHECK_FALSE(cloose.budget_exhausted);
    CHECK(cloose.count == cfull.count);
    CHECK(cloose.nodes_explored == cfull.nodes_explored);
}

TEST_CASE("results are identical for every parallel width") {
    auto base_find = find_chain(18, 3, 2);
    auto base_count = count_chains(16, 2, 2);
    SearchConfig base_cfg{3, 2, 18, std::nullopt, 1};
    auto base_search = search_min_n(base_cfg);

    for (int width : {2, 3, 8}) {
        SearchOptions opts;
        opts.parallel_width = width;
        auto f = find_chain(18, 3, 2, opts);
        CHECK(f.chain->sets == base_find.chain->sets);
        CHECK(f.nodes_explored == base_find.nodes_explored);

        auto c = count_chains(16, 2, 2, opts);
        CHECK(c.count == base_count.count);
        CHECK(c.nodes_explored == base_count.nodes_explored);
        REQUIRE(c.chains.size() == base_count.chains.size());
        for (std::size_t i = 0; i < c.chains.size(); ++i)
            CHECK(c.chains[i].sets == base_count.chains[i].sets);

        SearchConfig cfg{3, 2, 18, std::nullopt, width};
        auto s = search_min_n(cfg);
        CHECK(s.found_n == base_search.found_n);
        CHECK(s.nodes_explored == base_search.nodes_explored);
        CHECK(s.witness->sets == base_search.witness->sets);
    }

    // budget truncation must also be width independent
    SearchOptions cut1;
    cut1.node_budget = base_count.nodes_explored / 3;
    auto seq = count_chains(16, 2, 2, cut1);
    SearchOptions cut4 = cut1;
    cut4.parallel_width = 4;
    auto par = count_chains(16, 2, 2, cut4);
    CHECK(seq.count == par.count);
    CHECK(seq.nodes_explored == par.nodes_explored);
    CHECK(seq.budget_exhausted == par.budget_exhausted);
}

TEST_CASE("symmetry breaking changes node counts, not the chains found") {
    const int cases[][3] = {{8, 2, 2}, {12, 2, 2}, {12, 3, 1}, {6, 3, 1}};
    for (const auto& c : cases) {
        const int n = c[0], j = c[1], k = c[2];
        auto on = count_chains(n, j, k);
        SearchOptions opts;
        opts.symmetry_breaking = false;
        auto off = count_chains(n, j, k, opts);
        CHECK(on.count == off.count);
        REQUIRE(on.chains.size() == off.chains.size());
        for (std::size_t i = 0; i < on.chains.size(); ++i)
            CHECK(on.chains[i].sets == off.chains[i].sets);
        CHECK(off.nodes_explored > on.nodes_explored);
    }
}

TEST_CASE("monotone scan: the guaranteed bound is always reached") {
    const int cases[][2] = {{2, 2}, {2, 3}, {3, 2}};
    for (const auto& c : cases) {
        const int j = c[0], k = c[1];
        std::int64_t bound = 2;
        for (int i = 0; i < k; ++i) bound *= j;
        SearchConfig cfg{j, k, bound, std::nullopt, 1};
        auto r = search_min_n(cfg);
        CHECK(r.status == SearchStatus::found);
        CHECK(*r.found_n <= bound);
    }
}

TEST_CASE("search honors the node budget across the scan") {
    SearchConfig cfg{3, 2, 18, std::nullopt, 1};
    auto full = search_min_n(cfg);
    REQUIRE(full.status == SearchStatus::found);
    cfg.node_budget = full.nodes_explored - 1;
    auto cut = search_min_n(cfg);
    CHECK(cut.status == SearchStatus::budget_exhausted);
    CHECK(cut.nodes_explored == full.nodes_explored - 1);
    CHECK_FALSE(cut.found_n.has_value());
}
