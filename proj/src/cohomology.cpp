#include "polytrope/cohomology.hpp"

#include <functional>

#include "polytrope/errors.hpp"

namespace polytrope {

namespace {

// All monomials of total degree d in nvars variables.
void enumerate_degree(int nvars, int d, int from, Monomial& cur,
                      const std::function<void(const Monomial&)>& visit) {
    if (d == 0) {
        visit(cur);
        return;
    }
    for (int v = from; v < nvars; ++v)
        for (int k = 1; k <= d; ++k) {
            cur.e.push_back({v, k});
            enumerate_degree(nvars, d - k, v + 1, cur, visit);
            cur.e.pop_back();
        }
    // Degree left over with no variable to place it on: dead branch, nothing
    // visited (handled by loop bounds above).
}

}  // namespace

CohomologyContext::CohomologyContext(const WeightMatrix& W) : W_(W) {
    InitialIdealResult init = initial_ideal(W);
    M_ = std::move(init.M);
    tie_ = init.tie;

    std::vector<QPoly> gens;
    VarSet xs(VarKind::X, W.n);
    for (const Monomial& g : M_.generators) {
        QPoly p(xs);
        p.add_term(g, Rational(1));
        gens.push_back(std::move(p));
    }
    for (QPoly& l : linear_ideal_generators(W.n)) gens.push_back(std::move(l));
    G_ = buchberger(gens, init.basis.order);

    // The unique standard monomial of degree n-1 (= dim P).
    int d = W.n - 1;
    std::vector<Monomial> standard;
    Monomial cur;
    enumerate_degree(M_.nvars, d, 0, cur, [&](const Monomial& m) {
        for (const Monomial& lm : G_.leading)
            if (lm.divides(m)) return;
        standard.push_back(m);
    });
    if (standard.size() != 1)
        throw InternalConsistencyError(
            "expected a unique standard monomial of degree n-1, found " +
            std::to_string(standard.size()));
    m_ = standard[0];

    std::vector<int> facet = greedy_facet(M_);
    if (static_cast<int>(facet.size()) != d)
        throw InternalConsistencyError("greedy facet has wrong size");
    QPoly fm(xs);
    Monomial prod;
    for (int v : facet) prod = prod * Monomial::var(v);
    fm.add_term(prod, Rational(1));
    QPoly nf = normal_form(fm, G_);
    if (nf.terms.size() != 1 || !(nf.terms.begin()->first == m_))
        throw InternalConsistencyError(
            "facet monomial did not reduce to a multiple of m");
    gamma_ = nf.terms.begin()->second;
    if (is_zero(gamma_)) throw InternalConsistencyError("gamma is zero");
}

Rational CohomologyContext::coefficient_of_m(const Monomial& xmono) const {
    if (xmono == m_) return Rational(1);
    auto it = cache_.find(xmono);
    if (it != cache_.end()) return it->second;
    // One reduction step against the first matching generator, then recurse;
    // M+L is homogeneous, so everything stays in degree n-1 where m is the
    // only standard monomial.
    const QPoly* red = nullptr;
    const Monomial* lead = nullptr;
    for (size_t i = 0; i < G_.generators.size(); ++i)
        if (G_.leading[i].divides(xmono)) {
            red = &G_.generators[i];
            lead = &G_.leading[i];
            break;
        }
    if (!red)
        throw InternalConsistencyError(
            "standard monomial of top degree other than m encountered");
    Monomial q = lead->quotient_of(xmono);
    Rational total = 0;
    for (auto& [tm, tc] : red->terms) {
        if (tm == *lead) continue;
        total -= tc * coefficient_of_m(q * tm);
    }
    cache_.emplace(xmono, total);
    return total;
}

XPoly divisor_class(int n) {
    VarSet xs(VarKind::X, n), as(VarKind::A, n);
    XPoly q(xs);
    for (int v = 0; v < xs.size(); ++v)
        q.add_term(Monomial::var(v), APoly::variable(as, v, Rational(1)));
    return q;
}

APoly integrate_cohomology(const XPoly& p, const CohomologyContext& ctx) {
    VarSet as(VarKind::A, ctx.n());
    APoly delta(as);
    int d = ctx.n() - 1;
    for (auto& [m, coeff] : p.terms) {
        if (m.degree() != d) continue;  // other degrees never meet m
        Rational c = ctx.coefficient_of_m(m);
        if (is_zero(c)) continue;
        delta += coeff * c;
    }
    return delta * (Rational(1) / ctx.gamma());
}

APoly integrate_cohomology(const XPoly& p, const WeightMatrix& W) {
    CohomologyContext ctx(W);
    return integrate_cohomology(p, ctx);
}

VolumePolynomial volume_polynomial(const WeightMatrix& W) {
    require_kleene(W);
    CohomologyContext ctx(W);
    XPoly p = divisor_class(W.n).pow(W.n - 1);
    VolumePolynomial vol;
    vol.source_weight = W;
    vol.tie_flag = ctx.tie_flag();
    vol.normalized = integrate_cohomology(p, ctx);
    for (auto& [m, c] : vol.normalized.terms) {
        if (m.degree() != W.n - 1)
            throw InternalConsistencyError(
                "normalized volume polynomial is not homogeneous of degree n-1");
        if (!is_integer(c))
            throw InternalConsistencyError(
                "normalized volume polynomial has a non-integer coefficient");
    }
    vol.euclidean = vol.normalized * (Rational(1) / Rational(factorial(W.n - 1)));
    return vol;
}

}  // namespace polytrope
