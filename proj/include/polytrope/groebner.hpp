#pragma once

#include <vector>

#include "polytrope/multipoly.hpp"
#include "polytrope/tropical.hpp"

namespace polytrope {

// Weight-refined monomial order on x-variables: compare u.c first with LARGER
// weight leading, ties broken by graded reverse lexicographic. Valid monomial
// order for nonnegative weights.
struct TermOrder {
    std::vector<long long> weight;

    // <0, 0, >0 for u < v, u == v, u > v.
    int cmp(const Monomial& u, const Monomial& v) const {
        long long wu = u.weight(weight), wv = v.weight(weight);
        if (wu != wv) return wu < wv ? -1 : 1;
        return grevlex_cmp(u, v);
    }
    bool less(const Monomial& u, const Monomial& v) const { return cmp(u, v) < 0; }
};

TermOrder weight_order(const WeightMatrix& W);
TermOrder grevlex_order(int nvars);  // zero weight: pure grevlex

// Leading monomial of p under the order; p must be nonzero.
const Monomial& leading_monomial(const QPoly& p, const TermOrder& ord);

struct GroebnerBasis {
    std::vector<QPoly> generators;  // monic, reduced, canonically sorted
    std::vector<Monomial> leading;  // leading[i] = LM(generators[i])
    TermOrder order;
};

// Squarefree monomial ideal given by its minimal (pairwise non-dividing)
// generating monomials.
struct MonomialIdeal {
    std::vector<Monomial> generators;
    int nvars = 0;

    bool contains_monomial(const Monomial& m) const {
        for (auto& g : generators)
            if (g.divides(m)) return true;
        return false;
    }
};

// Binomial generators x_ij*x_ji - 1 (i<j) and x_ij*x_jk - x_ik.
std::vector<QPoly> toric_ideal_generators(int n);

// The n single-vertex cut forms sum_j x_kj - sum_j x_jk.
std::vector<QPoly> linear_ideal_generators(int n);

GroebnerBasis buchberger(const std::vector<QPoly>& gens, const TermOrder& ord);

QPoly normal_form(const QPoly& p, const GroebnerBasis& G);

// Linear over the nested coefficient domain: each x-monomial is reduced with
// rational arithmetic, coefficients are carried along unchanged.
XPoly normal_form(const XPoly& p, const GroebnerBasis& G);

struct InitialIdealResult {
    MonomialIdeal M;
    bool tie = false;  // some reduced generator has a weight tie between terms
    GroebnerBasis basis;  // reduced basis of the toric ideal used
};

InitialIdealResult initial_ideal(const WeightMatrix& W);

bool is_maximal_type(const WeightMatrix& W, bool crosscheck = false);

// Greedy facet of the Stanley-Reisner complex of M (fixed variable order);
// returns the generator set of the corresponding minimal prime, i.e. the
// complement of the facet. Facet size is asserted to be expected_facet_size
// when nonnegative.
std::vector<int> minimal_prime(const MonomialIdeal& M, int expected_facet_size = -1);

std::vector<std::vector<int>> minimal_primes_all(const MonomialIdeal& M);

// The facet (variable set) complementary to minimal_prime's generators.
std::vector<int> greedy_facet(const MonomialIdeal& M);

}  // namespace polytrope
