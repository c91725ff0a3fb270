#include <doctest.h>

#include "polytrope/cohomology.hpp"
#include "polytrope/ehrhart.hpp"
#include "polytrope/io.hpp"
#include "test_util.hpp"

using namespace polytrope;
using namespace polytrope::testutil;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(5) == 0);
    CHECK(bernoulli(6) == Rational(1, 42));
}

TEST_CASE("eulerian polynomials") {
    CHECK(eulerian_polynomial(0) == Univariate{Rational(1)});
    CHECK(eulerian_polynomial(1) == Univariate{Rational(0), Rational(1)});
    CHECK(eulerian_polynomial(2) ==
          Univariate{Rational(0), Rational(1), Rational(1)});
    // A_3 = t + 4t^2 + t^3, A_4 = t + 11t^2 + 11t^3 + t^4
    CHECK(eulerian_polynomial(3) ==
          Univariate{Rational(0), Rational(1), Rational(4), Rational(1)});
    CHECK(eulerian_polynomial(4) ==
          Univariate{Rational(0), Rational(1), Rational(11), Rational(11),
                     Rational(1)});
    // coefficients of A_d sum to d!
    Rational sum = 0;
    for (auto& c : eulerian_polynomial(5)) sum += c;
    CHECK(sum == Rational(factorial(5)));
}

TEST_CASE("univariate helpers") {
    Univariate p{Rational(1), Rational(2)};      // 1 + 2t
    Univariate q{Rational(-1), Rational(0), Rational(3)};
    CHECK(uni_mul(p, q) == Univariate{Rational(-1), Rational(-2), Rational(3),
                                      Rational(6)});
    CHECK(uni_eval(q, Rational(2)) == 11);
    Univariate z = uni_add(p, Univariate{Rational(-1), Rational(-2)});
    CHECK(z.empty());
}

TEST_CASE("todd operator on the hexagon") {
    WeightMatrix W = hexagon();
    VolumePolynomial V = volume_polynomial(W);
    EhrhartPolynomial ehr = todd_apply(V.euclidean, 2);
    // ehr = vol + sum a_ij / 2 + 1 for the hexagon type
    VarSet vs(VarKind::A, 3);
    APoly expected = V.euclidean +
                     parse_poly("1/2*a12 + 1/2*a13 + 1/2*a21 + 1/2*a23 "
                                "+ 1/2*a31 + 1/2*a32 + 1",
                                vs);
    CHECK(ehr.multivariate == expected);
    // constant term 1, top component = Euclidean volume
    CHECK(ehr.multivariate.homogeneous_component(0) ==
          APoly::constant(vs, Rational(1)));
    CHECK(ehr.multivariate.homogeneous_component(2) == V.euclidean);
    // truncating the Todd series later changes nothing
    CHECK(todd_apply(V.euclidean, 2, 6).multivariate == ehr.multivariate);

    CHECK(evaluate_at_weights(ehr.multivariate, W) == 52);
    Univariate uni = substitute_dilation(ehr.multivariate, W);
    CHECK(uni == Univariate{Rational(1), Rational(23, 2), Rational(79, 2)});
}

TEST_CASE("h* transform on the hexagon") {
    WeightMatrix W = hexagon();
    EhrhartPolynomial ehr = todd_apply(volume_polynomial(W).euclidean, 2);
    HStarPolynomial h = hstar_transform(ehr);
    REQUIRE(h.coefficients.size() == 3);
    VarSet vs(VarKind::A, 3);
    CHECK(h.coefficients[0] == APoly::constant(vs, Rational(1)));
    // published multivariate coefficients of t and t^2
    APoly t1 = parse_poly(
        "1/2*a12 + 1/2*a13 + 1/2*a21 + 1/2*a23 + 1/2*a31 + 1/2*a32 "
        "- 1/2*a12^2 - 1/2*a13^2 - 1/2*a21^2 - 1/2*a23^2 - 1/2*a31^2 "
        "- 1/2*a32^2 + a12*a13 + a13*a23 + a21*a23 + a21*a31 + a12*a32 "
        "+ a31*a32 - 2",
        vs);
    APoly t2 = parse_poly(
        "-1/2*a12 - 1/2*a13 - 1/2*a21 - 1/2*a23 - 1/2*a31 - 1/2*a32 "
        "- 1/2*a12^2 - 1/2*a13^2 - 1/2*a21^2 - 1/2*a23^2 - 1/2*a31^2 "
        "- 1/2*a32^2 + a12*a13 + a13*a23 + a21*a23 + a21*a31 + a12*a32 "
        "+ a31*a32 + 1",
        vs);
    CHECK(h.coefficients[1] == t1);
    CHECK(h.coefficients[2] == t2);
    CHECK(hstar_at_weights(h, W) ==
          Univariate{Rational(1), Rational(49), Rational(29)});
}

TEST_CASE("h* transform requires constant term 1") {
    VarSet vs(VarKind::A, 3);
    EhrhartPolynomial bogus{parse_poly("a12 + 2", vs), 2};
    CHECK_THROWS_AS(hstar_transform(bogus), DomainError);
}

TEST_CASE("segment pipeline, n = 2") {
    WeightMatrix W = segment();
    VolumePolynomial V = volume_polynomial(W);
    VarSet vs(VarKind::A, 2);
    CHECK(V.normalized == parse_poly("a12 + a21", vs));
    CHECK(V.euclidean == V.normalized);
    EhrhartPolynomial ehr = todd_apply(V.euclidean, 1);
    CHECK(ehr.multivariate == parse_poly("a12 + a21 + 1", vs));
    HStarPolynomial h = hstar_transform(ehr);
    REQUIRE(h.coefficients.size() == 2);
    CHECK(h.coefficients[0] == APoly::constant(vs, Rational(1)));
    CHECK(h.coefficients[1] == parse_poly("a12 + a21 - 1", vs));
}
