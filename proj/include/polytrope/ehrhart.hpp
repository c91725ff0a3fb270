#pragma once

#include <vector>

#include "polytrope/multipoly.hpp"
#include "polytrope/tropical.hpp"

namespace polytrope {

// Univariate polynomial in t (or k), coefficients lowest-degree-first.
using Univariate = std::vector<Rational>;

Univariate uni_add(const Univariate& a, const Univariate& b);
Univariate uni_mul(const Univariate& a, const Univariate& b);
Rational uni_eval(const Univariate& p, const Rational& x);
void uni_trim(Univariate& p);

// B_0..B_k via the generating-function recurrence, cached.
const Rational& bernoulli(int k);

// Eulerian polynomial A_d(t), cached.
const Univariate& eulerian_polynomial(int d);

struct EhrhartPolynomial {
    APoly multivariate;  // total degree n-1, constant term 1
    int dimension = 0;   // d = n-1
};

struct HStarPolynomial {
    std::vector<APoly> coefficients;  // index = power of t, size d+1
    int dimension = 0;
};

// Truncated multivariate Todd operator applied to the EUCLIDEAN volume
// polynomial of a unimodular d-polytope; yields the multivariate Ehrhart
// polynomial. `order` lets tests truncate later than d (same result).
EhrhartPolynomial todd_apply(const APoly& euclidean_vol, int d, int order = -1);

// h*(a,t) = sum_i lambda_i A_i(t) (1-t)^{d-i} with lambda_i the degree-i
// homogeneous components of the Ehrhart polynomial.
HStarPolynomial hstar_transform(const EhrhartPolynomial& ehr);

// a_ij -> t * c_ij; returns a polynomial in t.
Univariate substitute_dilation(const APoly& p, const WeightMatrix& W);

// a_ij -> c_ij.
Rational evaluate_at_weights(const APoly& p, const WeightMatrix& W);

// a_ij -> c_ij in every coefficient; returns the univariate h*-polynomial.
Univariate hstar_at_weights(const HStarPolynomial& h, const WeightMatrix& W);

}  // namespace polytrope
