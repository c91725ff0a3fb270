#include "polytrope/ehrhart.hpp"

#include <mutex>

#include "polytrope/errors.hpp"

namespace polytrope {

Univariate uni_add(const Univariate& a, const Univariate& b) {
    Univariate r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}

Univariate uni_mul(const Univariate& a, const Univariate& b) {
    if (a.empty() || b.empty()) return {};
    Univariate r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

Rational uni_eval(const Univariate& p, const Rational& x) {
    Rational r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

void uni_trim(Univariate& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

const Rational& bernoulli(int k) {
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= k) {
        int m = static_cast<int>(table.size());
        Rational s = 0;
        for (int j = 0; j < m; ++j)
            s += Rational(binomial(m + 1, j)) * table[j];
        table.push_back(-s / Rational(m + 1));
    }
    return table[k];
}

const Univariate& eulerian_polynomial(int d) {
    static std::vector<Univariate> table{{Rational(1)}};  // A_0 = 1
    static std::vector<std::vector<Integer>> numbers{{Integer(1)}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= d) {
        int dd = static_cast<int>(table.size());
        // Ascent recurrence A(d,m) = (m+1) A(d-1,m) + (d-m) A(d-1,m-1).
        std::vector<Integer> row(dd, Integer(0));
        for (int m = 0; m < dd; ++m) {
            Integer up = m < static_cast<int>(numbers[dd - 1].size())
                             ? numbers[dd - 1][m]
                             : Integer(0);
            Integer left = m > 0 ? numbers[dd - 1][m - 1] : Integer(0);
            row[m] = Integer(m + 1) * up + Integer(dd - m) * left;
        }
        Univariate poly(dd + 1, Rational(0));
        for (int m = 1; m <= dd; ++m) poly[m] = Rational(row[m - 1]);
        numbers.push_back(std::move(row));
        table.push_back(std::move(poly));
    }
    return table[d];
}

EhrhartPolynomial todd_apply(const APoly& euclidean_vol, int d, int order) {
    if (order < 0) order = d;
    // Per-variable series of Todd_h = 1 + sum_k (-1)^k B_k/k! d^k: the k-th
    // coefficient is (-1)^k B_k / k!.
    std::vector<Rational> coeff(order + 1);
    for (int k = 0; k <= order; ++k) {
        coeff[k] = bernoulli(k) / Rational(factorial(k));
        if (k % 2 == 1) coeff[k] = -coeff[k];
    }
    APoly f = euclidean_vol;
    for (int v = 0; v < f.vars.size(); ++v) {
        APoly acc = f * coeff[0];
        APoly deriv = f;
        for (int k = 1; k <= order; ++k) {
            deriv = deriv.derivative(v);
            if (deriv.is_zero()) break;
            acc += deriv * coeff[k];
        }
        f = std::move(acc);
    }
    return {std::move(f), d};
}

HStarPolynomial hstar_transform(const EhrhartPolynomial& ehr) {
    int d = ehr.dimension;
    APoly ones = ehr.multivariate.homogeneous_component(0);
    if (!(ones == APoly::constant(ehr.multivariate.vars, Rational(1))))
        throw DomainError("Ehrhart polynomial must have constant term 1");
    HStarPolynomial h;
    h.dimension = d;
    h.coefficients.assign(d + 1, APoly(ehr.multivariate.vars));
    Univariate one_minus_t{Rational(1), Rational(-1)};
    for (int i = 0; i <= d; ++i) {
        APoly lambda = ehr.multivariate.homogeneous_component(i);
        if (lambda.is_zero()) continue;
        Univariate u = eulerian_polynomial(i);
        for (int j = 0; j < d - i; ++j) u = uni_mul(u, one_minus_t);
        for (size_t j = 0; j < u.size(); ++j)
            h.coefficients[j] += lambda * u[j];
    }
    return h;
}

Univariate substitute_dilation(const APoly& p, const WeightMatrix& W) {
    std::vector<long long> c = W.offdiagonal();
    if (static_cast<int>(c.size()) != p.vars.size())
        throw DomainError("weight matrix does not match variable set");
    Univariate r;
    for (auto& [m, coeff] : p.terms) {
        Rational t = coeff;
        for (auto& [v, k] : m.e)
            for (int i = 0; i < k; ++i) t *= to_rational(c[v]);
        size_t deg = static_cast<size_t>(m.degree());
        if (r.size() <= deg) r.resize(deg + 1, Rational(0));
        r[deg] += t;
    }
    uni_trim(r);
    return r;
}

Rational evaluate_at_weights(const APoly& p, const WeightMatrix& W) {
    std::vector<long long> c = W.offdiagonal();
    std::vector<Rational> point;
    for (long long v : c) point.push_back(to_rational(v));
    return evaluate(p, point);
}

Univariate hstar_at_weights(const HStarPolynomial& h, const WeightMatrix& W) {
    Univariate r;
    for (const APoly& c : h.coefficients) r.push_back(evaluate_at_weights(c, W));
    uni_trim(r);
    return r;
}

}  // namespace polytrope
