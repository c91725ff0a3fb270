#include <doctest.h>

#include <random>

#include "polytrope/oracle.hpp"
#include "test_util.hpp"

using namespace polytrope;
using namespace polytrope::testutil;

TEST_CASE("hexagon dilate counts") {
    WeightMatrix W = hexagon();
    CHECK(count_lattice_points(W, 0) == 1);
    CHECK(count_lattice_points(W, 1) == 52);
    CHECK(count_lattice_points(W, 2) == 182);
    // Ehrhart check at k = 3: 79/2*9 + 23/2*3 + 1
    Rational at3 = Rational(79, 2) * 9 + Rational(23, 2) * 3 + 1;
    CHECK(to_rational(count_lattice_points(W, 3)) == at3);
}

TEST_CASE("serial and parallel counters agree") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + trial % 2;
        WeightMatrix W = kleene_star(random_matrix(rng, n, 1, 9));
        for (int k = 0; k <= 3; ++k)
            CHECK(count_lattice_points(W, k) ==
                  count_lattice_points_serial(W, k));
    }
}

TEST_CASE("interpolated Ehrhart polynomial") {
    WeightMatrix W = hexagon();
    Univariate ehr = interpolate_ehrhart(W);
    CHECK(ehr == Univariate{Rational(1), Rational(23, 2), Rational(79, 2)});
    // reproduces counts beyond the interpolation window
    CHECK(uni_eval(ehr, Rational(5)) == to_rational(count_lattice_points(W, 5)));
    CHECK(normalized_volume_bruteforce(W) == 79);
}

TEST_CASE("brute-force h* vector") {
    WeightMatrix W = hexagon();
    std::vector<Integer> h = hstar_bruteforce(W);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == 1);
    CHECK(h[1] == 49);
    CHECK(h[2] == 29);
}

TEST_CASE("enumeration cap") {
    WeightMatrix W = hexagon();
    CHECK_THROWS_AS(count_lattice_points(W, 100, 1000), ResourceCapError);
    // generous cap succeeds
    CHECK(count_lattice_points(W, 4, 100000) > 0);
}

TEST_CASE("segment counts") {
    WeightMatrix W = segment();  // interval [-3, 2] in the chart x2 = 0
    CHECK(count_lattice_points(W, 1) == 6);
    CHECK(interpolate_ehrhart(W) == Univariate{Rational(1), Rational(5)});
    CHECK(normalized_volume_bruteforce(W) == 5);
    std::vector<Integer> h = hstar_bruteforce(W);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == 1);
    CHECK(h[1] == 4);
}
