#pragma once

#include <vector>

#include "polytrope/errors.hpp"

namespace polytrope {

// n x n integer edge-weight matrix with zero diagonal. Entry (i,j), 1-based,
// is the weight of the edge i -> j of the complete digraph on [n].
struct WeightMatrix {
    int n = 0;
    std::vector<long long> entries;  // row-major, n*n

    WeightMatrix() = default;
    WeightMatrix(int dim, std::vector<long long> e);

    long long at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
    long long& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }

    // Off-diagonal entries as a weight vector in the canonical (i,j) order,
    // matching VarSet pair indexing.
    std::vector<long long> offdiagonal() const;

    bool operator==(const WeightMatrix&) const = default;
};

// Inequalities y_i - y_j <= c_ij in the chart y_n = 0.
struct HRep {
    struct Inequality {
        int i, j;
        long long bound;
    };
    int n = 0;
    std::vector<Inequality> inequalities;  // n^2 - n of them
};

// All-pairs shortest path weights (Floyd-Warshall). Throws NegativeCycleError
// with a witness cycle if the digraph has one.
WeightMatrix kleene_star(const WeightMatrix& W);

// True iff W has no negative cycle and kleene_star(W) == W.
bool is_kleene(const WeightMatrix& W);

void require_kleene(const WeightMatrix& W);

HRep hrep(const WeightMatrix& W);

// Membership of the point (x_1,...,x_{n-1}, 0) in the polytrope of W.
bool contains_point(const WeightMatrix& W, const std::vector<long long>& x);

// Simultaneous row/column permutation: result(i,j) = W(perm[i], perm[j]),
// perm a permutation of [n] given 1-based as perm[1..n] (index 0 unused).
WeightMatrix permuted(const WeightMatrix& W, const std::vector<int>& perm);

}  // namespace polytrope
