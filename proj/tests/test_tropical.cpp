#include <doctest.h>

#include <random>

#include "polytrope/tropical.hpp"
#include "test_util.hpp"

using namespace polytrope;
using namespace polytrope::testutil;

TEST_CASE("hexagon matrix is a Kleene star") {
    WeightMatrix W = hexagon();
    CHECK(is_kleene(W));
    CHECK(kleene_star(W) == W);
}

TEST_CASE("shortest path through an intermediate vertex") {
    // c12 raised to 100: the star routes 1 -> 3 -> 2 with weight 2 + 6 = 8.
    WeightMatrix W = hexagon();
    W.at(1, 2) = 100;
    WeightMatrix star = kleene_star(W);
    CHECK(star.at(1, 2) == 8);
    CHECK(!is_kleene(W));
    CHECK(is_kleene(star));
}

TEST_CASE("negative cycle raises with a witness") {
    WeightMatrix W(3, {0, 1, 5, -2, 0, 5, 5, 5, 0});
    try {
        kleene_star(W);
        FAIL("expected NegativeCycleError");
    } catch (const NegativeCycleError& e) {
        REQUIRE(e.cycle.size() >= 3);
        CHECK(e.cycle.front() == e.cycle.back());
        long long total = 0;
        for (size_t i = 0; i + 1 < e.cycle.size(); ++i)
            total += W.at(e.cycle[i], e.cycle[i + 1]);
        CHECK(total < 0);
    }
}

TEST_CASE("star is idempotent on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 3;
        WeightMatrix W = random_matrix(rng, n, -2, 12);
        try {
            WeightMatrix star = kleene_star(W);
            CHECK(kleene_star(star) == star);
            CHECK(is_kleene(star));
            // star entries never exceed the direct edge
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) CHECK(star.at(i, j) <= W.at(i, j));
        } catch (const NegativeCycleError&) {
            // acceptable for matrices with negative entries
        }
    }
}

TEST_CASE("h-representation and membership") {
    WeightMatrix W = hexagon();
    HRep H = hrep(W);
    CHECK(H.inequalities.size() == 6);
    CHECK(contains_point(W, {0, 0}));
    CHECK(contains_point(W, {2, 4}));     // vertex: x1 = c13, x2 = c23
    CHECK(contains_point(W, {-5, -6}));   // vertex: -x1 = c31, -x2 = c32
    CHECK(!contains_point(W, {3, 1}));    // violates x1 - x3 <= 2
    CHECK(!contains_point(W, {0, -7}));   // violates x3 - x2 <= 6
}

TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(WeightMatrix(3, {0, 1, 2, 3}), DomainError);
    CHECK_THROWS_AS(WeightMatrix(2, {1, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(WeightMatrix(1, {0}), DomainError);
    WeightMatrix W = hexagon();
    CHECK(W.offdiagonal() == std::vector<long long>{3, 2, 3, 4, 5, 6});
    WeightMatrix bad = W;
    bad.at(2, 3) = -10;  // creates a negative cycle 2 -> 3 -> 2
    CHECK_THROWS_AS(require_kleene(bad), NegativeCycleError);
    bad.at(2, 3) = 100;  // no negative cycle but not a fixed point
    CHECK_THROWS_AS(require_kleene(bad), NotKleeneError);
}

TEST_CASE("simultaneous permutation") {
    WeightMatrix W = example_3d();
    std::vector<int> swap24 = {0, 1, 4, 3, 2};
    WeightMatrix P = permuted(W, swap24);
    CHECK(P == example_3d_relabeled());
    CHECK(permuted(P, swap24) == W);
    // permuting a Kleene star yields a Kleene star
    CHECK(is_kleene(P));
}
