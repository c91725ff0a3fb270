#include "polytrope/groebner.hpp"

#include <algorithm>
#include <map>

#include "polytrope/errors.hpp"

namespace polytrope {

TermOrder weight_order(const WeightMatrix& W) {
    TermOrder ord{W.offdiagonal()};
    for (long long w : ord.weight)
        if (w < 0)
            throw DomainError(
                "weight order needs nonnegative entries (translate the "
                "polytrope first)");
    return ord;
}

TermOrder grevlex_order(int nvars) {
    return TermOrder{std::vector<long long>(nvars, 0)};
}

const Monomial& leading_monomial(const QPoly& p, const TermOrder& ord) {
    if (p.is_zero()) throw DomainError("leading monomial of zero polynomial");
    const Monomial* best = nullptr;
    for (auto& [m, c] : p.terms)
        if (!best || ord.cmp(m, *best) > 0) best = &m;
    return *best;
}

std::vector<QPoly> toric_ideal_generators(int n) {
    if (n < 2) throw DomainError("need n >= 2");
    VarSet xs(VarKind::X, n);
    std::vector<QPoly> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            QPoly g(xs);
            g.add_term(Monomial::var(xs.index(i, j)) * Monomial::var(xs.index(j, i)),
                       Rational(1));
            g.add_term(Monomial::one(), Rational(-1));
            gens.push_back(std::move(g));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                QPoly g(xs);
                g.add_term(
                    Monomial::var(xs.index(i, j)) * Monomial::var(xs.index(j, k)),
                    Rational(1));
                g.add_term(Monomial::var(xs.index(i, k)), Rational(-1));
                gens.push_back(std::move(g));
            }
    return gens;
}

std::vector<QPoly> linear_ideal_generators(int n) {
    if (n < 2) throw DomainError("need n >= 2");
    VarSet xs(VarKind::X, n);
    std::vector<QPoly> gens;
    for (int k = 1; k <= n; ++k) {
        QPoly g(xs);
        for (int j = 1; j <= n; ++j) {
            if (j == k) continue;
            g.add_term(Monomial::var(xs.index(k, j)), Rational(1));
            g.add_term(Monomial::var(xs.index(j, k)), Rational(-1));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

namespace {

// p -= c * x^q * g, exact.
void sub_shifted(QPoly& p, const Rational& c, const Monomial& q, const QPoly& g) {
    for (auto& [m, gc] : g.terms) p.add_term(q * m, Rational(-c * gc));
}

QPoly make_monic(QPoly p, const TermOrder& ord) {
    const Monomial& lm = leading_monomial(p, ord);
    Rational lc = *p.coefficient(lm);
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        QPoly q(p.vars);
        for (auto& [m, c] : p.terms) q.terms.emplace(m, c * inv);
        return q;
    }
    return p;
}

QPoly reduce_full(QPoly p, const std::vector<QPoly>& gens,
                  const std::vector<Monomial>& leads, const TermOrder& ord,
                  int skip = -1) {
    QPoly rem(p.vars);
    while (!p.is_zero()) {
        const Monomial lm = leading_monomial(p, ord);
        bool reduced = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (static_cast<int>(i) == skip) continue;
            if (leads[i].divides(lm)) {
                Rational c = *p.coefficient(lm);
                sub_shifted(p, c, leads[i].quotient_of(lm), gens[i]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, *p.coefficient(lm));
            p.terms.erase(lm);
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<QPoly>& input, const TermOrder& ord) {
    std::vector<QPoly> G;
    std::vector<Monomial> lead;
    for (const QPoly& g : input) {
        if (g.is_zero()) continue;
        QPoly m = make_monic(g, ord);
        bool dup = false;
        for (auto& h : G) dup = dup || h == m;
        if (!dup) {
            lead.push_back(leading_monomial(m, ord));
            G.push_back(std::move(m));
        }
    }

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, lead[i].lcm(lead[j])});
    };
    for (size_t j = 0; j < G.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        // Normal strategy: pair with minimal lcm in the term order.
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (ord.cmp(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        if (lead[pr.i].coprime(lead[pr.j])) continue;  // product criterion
        // Chain criterion: skip if some other basis element divides the lcm
        // and both companion pairs were already handled.
        bool chained = false;
        for (size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lead[k].divides(pr.lcm)) continue;
            bool pending = false;
            for (auto& q : pairs) {
                if ((q.i == std::min(pr.i, k) && q.j == std::max(pr.i, k)) ||
                    (q.i == std::min(pr.j, k) && q.j == std::max(pr.j, k)))
                    pending = true;
            }
            chained = !pending;
        }
        if (chained) continue;

        QPoly shifted(G[pr.i].vars);
        sub_shifted(shifted, Rational(-1), lead[pr.i].quotient_of(pr.lcm), G[pr.i]);
        sub_shifted(shifted, Rational(1), lead[pr.j].quotient_of(pr.lcm), G[pr.j]);
        QPoly r = reduce_full(std::move(shifted), G, lead, ord);
        if (!r.is_zero()) {
            r = make_monic(std::move(r), ord);
            lead.push_back(leading_monomial(r, ord));
            G.push_back(std::move(r));
            push_pairs(G.size() - 1);
        }
    }

    // Minimalize: drop generators whose leading monomial another one divides.
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size() && keep[i]; ++j)
            if (i != j && keep[j] && lead[j].divides(lead[i]) &&
                !(lead[i] == lead[j] && j > i))
                keep[i] = false;
    std::vector<QPoly> mins;
    std::vector<Monomial> mlead;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) {
            mins.push_back(G[i]);
            mlead.push_back(lead[i]);
        }
    // Fully reduce tails against the rest.
    for (size_t i = 0; i < mins.size(); ++i)
        mins[i] = reduce_full(mins[i], mins, mlead, ord, static_cast<int>(i));
    // Deterministic output: sort by leading monomial, ascending in the order.
    std::vector<size_t> idx(mins.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return ord.cmp(mlead[a], mlead[b]) < 0;
    });
    GroebnerBasis out;
    out.order = ord;
    for (size_t i : idx) {
        out.generators.push_back(std::move(mins[i]));
        out.leading.push_back(std::move(mlead[i]));
    }
    return out;
}

QPoly normal_form(const QPoly& p, const GroebnerBasis& G) {
    return reduce_full(p, G.generators, G.leading, G.order);
}

XPoly normal_form(const XPoly& p, const GroebnerBasis& G) {
    XPoly out(p.vars);
    for (auto& [m, coeff] : p.terms) {
        QPoly base(p.vars);
        base.add_term(m, Rational(1));
        QPoly nf = normal_form(base, G);
        for (auto& [rm, rc] : nf.terms) out.add_term(rm, coeff * rc);
    }
    return out;
}

InitialIdealResult initial_ideal(const WeightMatrix& W) {
    require_kleene(W);
    TermOrder ord = weight_order(W);
    GroebnerBasis gb = buchberger(toric_ideal_generators(W.n), ord);
    InitialIdealResult res;
    res.M.nvars = static_cast<int>(ord.weight.size());
    for (size_t i = 0; i < gb.generators.size(); ++i) {
        long long lw = gb.leading[i].weight(ord.weight);
        for (auto& [m, c] : gb.generators[i].terms)
            if (!(m == gb.leading[i]) && m.weight(ord.weight) == lw)
                res.tie = true;
        res.M.generators.push_back(gb.leading[i]);
    }
    res.basis = std::move(gb);
    return res;
}

bool is_maximal_type(const WeightMatrix& W, bool crosscheck) {
    InitialIdealResult r = initial_ideal(W);
    if (r.tie) return false;
    if (crosscheck) {
        size_t count = minimal_primes_all(r.M).size();
        Integer expect = binomial(2 * W.n - 2, W.n - 1);
        if (Integer(static_cast<long>(count)) != expect)
            throw InternalConsistencyError(
                "minimal prime count does not match the maximal vertex count");
    }
    return true;
}

namespace {

bool is_face(const MonomialIdeal& M, const std::vector<int>& vars) {
    Monomial m;
    for (int v : vars) m = m * Monomial::var(v);
    return !M.contains_monomial(m);
}

}  // namespace

std::vector<int> greedy_facet(const MonomialIdeal& M) {
    std::vector<int> facet;
    for (int v = 0; v < M.nvars; ++v) {
        facet.push_back(v);
        if (!is_face(M, facet)) facet.pop_back();
    }
    return facet;
}

std::vector<int> minimal_prime(const MonomialIdeal& M, int expected_facet_size) {
    std::vector<int> facet = greedy_facet(M);
    if (expected_facet_size >= 0 &&
        static_cast<int>(facet.size()) != expected_facet_size)
        throw InternalConsistencyError(
            "facet size " + std::to_string(facet.size()) + ", expected " +
            std::to_string(expected_facet_size));
    std::vector<int> prime;
    size_t k = 0;
    for (int v = 0; v < M.nvars; ++v) {
        if (k < facet.size() && facet[k] == v)
            ++k;
        else
            prime.push_back(v);
    }
    return prime;
}

std::vector<std::vector<int>> minimal_primes_all(const MonomialIdeal& M) {
    // Enumerate all faces by increasing size, then keep the maximal ones.
    std::vector<std::vector<int>> faces{{}};
    std::vector<std::vector<int>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& f : frontier) {
            int start = f.empty() ? 0 : f.back() + 1;
            for (int v = start; v < M.nvars; ++v) {
                std::vector<int> g = f;
                g.push_back(v);
                if (is_face(M, g)) next.push_back(std::move(g));
            }
        }
        faces.insert(faces.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> primes;
    for (auto& f : faces) {
        bool maximal = true;
        for (int v = 0; v < M.nvars && maximal; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<int> g = f;
            g.insert(std::lower_bound(g.begin(), g.end(), v), v);
            if (is_face(M, g)) maximal = false;
        }
        if (!maximal) continue;
        std::vector<int> prime;
        size_t k = 0;
        for (int v = 0; v < M.nvars; ++v) {
            if (k < f.size() && f[k] == v)
                ++k;
            else
                prime.push_back(v);
        }
        primes.push_back(std::move(prime));
    }
    return primes;
}

}  // namespace polytrope
