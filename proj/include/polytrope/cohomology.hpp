#pragma once

#include <map>

#include "polytrope/groebner.hpp"
#include "polytrope/multipoly.hpp"
#include "polytrope/tropical.hpp"

namespace polytrope {

struct VolumePolynomial {
    APoly normalized;  // homogeneous of degree n-1, integer coefficients
    APoly euclidean;   // normalized / (n-1)!
    WeightMatrix source_weight;
    bool tie_flag = false;  // boundary weight handled via the refined order
};

// Everything Algorithm-1 needs for one weight matrix: the Groebner basis of
// M+L under the weight-refined order, the unique top-degree standard monomial
// m and the facet scalar gamma with NF(prod of facet variables) = gamma * m.
class CohomologyContext {
public:
    explicit CohomologyContext(const WeightMatrix& W);

    int n() const { return W_.n; }
    bool tie_flag() const { return tie_; }
    const GroebnerBasis& basis() const { return G_; }
    const MonomialIdeal& initial() const { return M_; }
    const Monomial& top_standard_monomial() const { return m_; }
    const Rational& gamma() const { return gamma_; }

    // Coefficient of m in the normal form of a single x-monomial (memoized).
    Rational coefficient_of_m(const Monomial& xmono) const;

private:
    WeightMatrix W_;
    MonomialIdeal M_;
    GroebnerBasis G_;
    Monomial m_;
    Rational gamma_;
    bool tie_ = false;
    mutable std::map<Monomial, Rational, CanonicalTermCmp> cache_;
};

// The divisor class q = sum a_ij x_ij as an x-polynomial with a-coefficients.
XPoly divisor_class(int n);

// Algorithm-1 integral of the cohomology class of p over the toric variety of
// W's normal fan: delta/gamma where delta is the m-coefficient of NF(p).
APoly integrate_cohomology(const XPoly& p, const CohomologyContext& ctx);
APoly integrate_cohomology(const XPoly& p, const WeightMatrix& W);

VolumePolynomial volume_polynomial(const WeightMatrix& W);

}  // namespace polytrope
