#pragma once

#include <random>
#include <vector>

#include "polytrope/multipoly.hpp"
#include "polytrope/tropical.hpp"

namespace polytrope::testutil {

// Running example: the tropical hexagon, c = (3, 2, 3, 4, 5, 6).
inline WeightMatrix hexagon() {
    return WeightMatrix(3, {0, 3, 2, 3, 0, 4, 5, 6, 0});
}

inline WeightMatrix segment() { return WeightMatrix(2, {0, 2, 3, 0}); }

// The published 3-dimensional example matrix.
inline WeightMatrix example_3d() {
    return WeightMatrix(4, {0, 11, 20, 29, 21, 0, 19, 20, 20, 29, 0, 11, 19,
                            20, 21, 0});
}

// The same tropical type with vertices 2 and 4 swapped; this labeling matches
// the published coefficient values (see notes on the example in the README).
inline WeightMatrix example_3d_relabeled() {
    return WeightMatrix(4, {0, 29, 20, 11, 19, 0, 21, 20, 20, 11, 0, 29, 21,
                            20, 19, 0});
}

// Random integer matrix with off-diagonal entries in [lo, hi].
inline WeightMatrix random_matrix(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    WeightMatrix W(n, std::vector<long long>(n * n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) W.at(i, j) = dist(rng);
    return W;
}

// Apply a simultaneous index relabeling to the variables of a polynomial:
// a_ij -> a_{perm[i] perm[j]} (perm 1-based, index 0 unused).
inline APoly permute_vars(const APoly& p, const std::vector<int>& perm) {
    APoly r(p.vars);
    for (auto& [m, c] : p.terms) {
        Monomial pm;
        for (auto& [v, k] : m.e) {
            auto [i, j] = p.vars.pair_of(v);
            pm = pm * Monomial::var(p.vars.index(perm[i], perm[j]), k);
        }
        r.add_term(pm, c);
    }
    return r;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n + 1);
    for (int i = 1; i <= n; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    return perm;
}

}  // namespace polytrope::testutil
