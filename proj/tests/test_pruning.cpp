#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deduct/engine.hpp"
#include "deduct/pruning.hpp"
#include "deduct/solver.hpp"

using namespace deduct;

TEST_CASE("pruning pinned examples") {
    SUBCASE("P5") {
        const PruneResult r = prune(generate(FamilySpec::path(5)));
        CHECK(r.p == 3);
        CHECK(r.layout.support() == std::vector<Vertex>{0, 2, 4});
        CHECK(r.iterations == 2);
    }
    SUBCASE("P9 takes three passes") {
        const PruneResult r = prune(generate(FamilySpec::path(9)));
        CHECK(r.p == 5);
        CHECK(r.layout.support() == std::vector<Vertex>{0, 2, 4, 6, 8});
        CHECK(r.iterations == 3);
    }
    SUBCASE("spider with three legs of length two") {
        const Graph g(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
        const PruneResult r = prune(g);
        CHECK(r.p == 4);
        CHECK(r.layout.support() == std::vector<Vertex>{0, 2, 4, 6});
        CHECK(r.iterations == 2);
    }
    SUBCASE("star drops in one pass") {
        const PruneResult r = prune(generate(FamilySpec::star(6)));
        CHECK(r.p == 5);
        CHECK(r.layout.support() == std::vector<Vertex>{1, 2, 3, 4, 5});
        CHECK(r.iterations == 1);
    }
    SUBCASE("K1") {
        const PruneResult r = prune(Graph(1));
        CHECK(r.p == 1);
        CHECK(r.layout.support() == std::vector<Vertex>{0});
        CHECK(r.iterations == 1);
    }
    SUBCASE("single edge keeps only the lower label") {
        const PruneResult r = prune(Graph(2, {{0, 1}}));
        CHECK(r.p == 1);
        CHECK(r.layout.support() == std::vector<Vertex>{0});
    }
}

TEST_CASE("pruning a forest works on all components at once") {
    const PruneResult r = prune(Graph(5, {{0, 1}, {2, 3}}));
    CHECK(r.p == 3);
    CHECK(r.layout.support() == std::vector<Vertex>{0, 2, 4});
    CHECK(r.iterations == 1);

    const PruneResult r2 = prune(Graph(8, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {5, 7}}));
    CHECK(r2.p == 5);
    CHECK(r2.iterations == 1);
}

TEST_CASE("pruning rejects anything with a cycle") {
    CHECK_THROWS_AS(prune(generate(FamilySpec::cycle(4))), std::invalid_argument);
    CHECK_THROWS_AS(prune(Graph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("pruning computes the deduction number of every small tree") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            const PruneResult r = prune(t);
            CHECK(r.layout.is_standard());
            CHECK(r.layout.total() == r.p);
            CHECK(simulate(t, r.layout).success);
            CHECK(r.p == solve(t).d);
        });
    }
}

TEST_CASE("pruning layouts stay successful on bigger random trees") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(10));
        const Graph t = generate(FamilySpec::random_tree(n, rng.next()));
        const PruneResult r = prune(t);
        CHECK(simulate(t, r.layout).success);
        CHECK(r.p >= (n + 1) / 2);
    }
}
