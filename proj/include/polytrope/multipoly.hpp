#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polytrope/errors.hpp"
#include "polytrope/monomial.hpp"
#include "polytrope/rational.hpp"
#include "polytrope/varset.hpp"

namespace polytrope {

template <class C>
struct MultiPoly;

inline bool coeff_is_zero(const Rational& r) { return is_zero(r); }
template <class C>
bool coeff_is_zero(const MultiPoly<C>& p) {
    return p.terms.empty();
}

inline Rational coeff_neg(const Rational& r) { return -r; }
template <class C>
MultiPoly<C> coeff_neg(const MultiPoly<C>& p);

// mpq arithmetic assumes canonical operands; normalize on the way in so a
// Rational(6, 3) handed to add_term cannot poison later comparisons.
inline void coeff_canonicalize(Rational& r) { r.canonicalize(); }
template <class C>
void coeff_canonicalize(MultiPoly<C>&) {}

// Sparse multivariate polynomial over a fixed VarSet. Coefficients are either
// Rational or, for the nested coefficient domain, MultiPoly<Rational> over the
// a-variables. Terms iterate in canonical order (degree desc, grevlex desc)
// and never store zero coefficients.
template <class C>
struct MultiPoly {
    VarSet vars;
    std::map<Monomial, C, CanonicalTermCmp> terms;

    MultiPoly() = default;
    explicit MultiPoly(VarSet vs) : vars(vs) {}

    static MultiPoly constant(VarSet vs, C c) {
        MultiPoly p(vs);
        p.add_term(Monomial::one(), std::move(c));
        return p;
    }

    static MultiPoly variable(VarSet vs, int v, C c) {
        MultiPoly p(vs);
        p.add_term(Monomial::var(v), std::move(c));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    int degree() const {
        // Canonical order puts a maximal-degree term first.
        return terms.empty() ? -1 : terms.begin()->first.degree();
    }

    void add_term(const Monomial& m, const C& c) {
        C v = c;
        coeff_canonicalize(v);
        if (coeff_is_zero(v)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, std::move(v));
        } else {
            it->second += v;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }

    bool has_term(const Monomial& m) const { return terms.count(m) != 0; }

    const C* coefficient(const Monomial& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? nullptr : &it->second;
    }

    void check_same_domain(const MultiPoly& o) const {
        if (!(vars == o.vars)) throw DomainError("mixed variable sets");
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_domain(o);
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_domain(o);
        for (auto& [m, c] : o.terms) add_term(m, coeff_neg(c));
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r(vars);
        for (auto& [m, c] : terms) r.terms.emplace(m, coeff_neg(c));
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_domain(b);
        MultiPoly r(a.vars);
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) r.add_term(ma * mb, ca * cb);
        return r;
    }

    // Rational scalar multiple; Groebner reduction relies on this staying in
    // the coefficient domain (basis coefficients are rational).
    friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
        MultiPoly r(a.vars);
        if (polytrope::is_zero(s)) return r;
        for (auto& [m, c] : a.terms) r.terms.emplace(m, c * s);
        return r;
    }

    MultiPoly pow(int k) const {
        if (k < 0) throw DomainError("negative power");
        MultiPoly r = constant(vars, unit_like());
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return r;
    }

    MultiPoly derivative(int v) const {
        if (v < 0 || v >= vars.size()) throw DomainError("unknown variable");
        MultiPoly r(vars);
        for (auto& [m, c] : terms) {
            int k = m.exponent(v);
            if (k == 0) continue;
            Monomial q = Monomial::var(v).quotient_of(m);
            r.add_term(q, c * Rational(k));
        }
        return r;
    }

    MultiPoly homogeneous_component(int i) const {
        MultiPoly r(vars);
        for (auto& [m, c] : terms)
            if (m.degree() == i) r.terms.emplace(m, c);
        return r;
    }

    // Partial substitution: variables absent from the assignment persist.
    MultiPoly substitute(const std::map<int, MultiPoly>& assignment) const {
        MultiPoly r(vars);
        for (auto& [m, c] : terms) {
            MultiPoly term = constant(vars, c);
            Monomial rest;
            for (auto& [v, k] : m.e) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    rest = rest * Monomial::var(v, k);
                else
                    term = term * it->second.pow(k);
            }
            for (auto& [tm, tc] : term.terms) r.add_term(tm * rest, tc);
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        return vars == o.vars && terms == o.terms;
    }

    // A multiplicative unit of the coefficient domain.
    C unit_like() const;
};

template <class C>
MultiPoly<C> coeff_neg(const MultiPoly<C>& p) {
    return -p;
}

template <>
inline Rational MultiPoly<Rational>::unit_like() const {
    return Rational(1);
}
template <>
inline MultiPoly<Rational> MultiPoly<MultiPoly<Rational>>::unit_like() const {
    VarSet cv = terms.empty() ? VarSet(VarKind::A, vars.n)
                              : terms.begin()->second.vars;
    return MultiPoly<Rational>::constant(cv, Rational(1));
}

using QPoly = MultiPoly<Rational>;             // rational coefficients
using APoly = QPoly;                           // a-variable polynomial
using XPoly = MultiPoly<MultiPoly<Rational>>;  // x-poly with a-poly coefficients

// Exact evaluation of a rational-coefficient polynomial at a point.
inline Rational evaluate(const QPoly& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.vars.size())
        throw DomainError("evaluation point has wrong length");
    Rational total = 0;
    for (auto& [m, c] : p.terms) {
        Rational t = c;
        for (auto& [v, k] : m.e)
            for (int i = 0; i < k; ++i) t *= point[v];
        total += t;
    }
    return total;
}

}  // namespace polytrope
