#include "polytrope/tropical.hpp"

#include <algorithm>

namespace polytrope {

WeightMatrix::WeightMatrix(int dim, std::vector<long long> e)
    : n(dim), entries(std::move(e)) {
    if (n < 2) throw DomainError("weight matrix needs n >= 2");
    if (static_cast<int>(entries.size()) != n * n)
        throw DomainError("weight matrix has wrong entry count");
    for (int i = 1; i <= n; ++i)
        if (at(i, i) != 0) throw DomainError("weight matrix diagonal must be 0");
}

std::vector<long long> WeightMatrix::offdiagonal() const {
    std::vector<long long> v;
    v.reserve(n * n - n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) v.push_back(at(i, j));
    return v;
}

namespace {

// Bellman-Ford witness extraction, called only once a negative cycle is known
// to exist. Returns the cycle 1-based with first vertex repeated at the end.
std::vector<int> find_negative_cycle(const WeightMatrix& W) {
    int n = W.n;
    std::vector<long long> dist(n, 0);  // virtual source at distance 0 to all
    std::vector<int> parent(n, -1);
    int touched = -1;
    for (int round = 0; round < n; ++round) {
        touched = -1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && dist[i] + W.at(i + 1, j + 1) < dist[j]) {
                    dist[j] = dist[i] + W.at(i + 1, j + 1);
                    parent[j] = i;
                    touched = j;
                }
        if (touched < 0) break;
    }
    if (touched < 0)
        throw InternalConsistencyError("negative cycle vanished on re-check");
    int v = touched;
    for (int step = 0; step < n; ++step) v = parent[v];  // land inside cycle
    std::vector<int> cycle{v + 1};
    for (int u = parent[v]; u != v; u = parent[u]) cycle.push_back(u + 1);
    cycle.push_back(v + 1);
    std::reverse(cycle.begin() + 1, cycle.end() - 1);
    return cycle;
}

}  // namespace

WeightMatrix kleene_star(const WeightMatrix& W) {
    int n = W.n;
    std::vector<long long> d = W.entries;
    auto D = [&](int i, int j) -> long long& { return d[i * n + j]; };
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (D(i, k) + D(k, j) < D(i, j)) D(i, j) = D(i, k) + D(k, j);
    for (int i = 0; i < n; ++i)
        if (D(i, i) < 0) throw NegativeCycleError(find_negative_cycle(W));
    return WeightMatrix(n, std::move(d));
}

bool is_kleene(const WeightMatrix& W) {
    try {
        return kleene_star(W) == W;
    } catch (const NegativeCycleError&) {
        return false;
    }
}

void require_kleene(const WeightMatrix& W) {
    // propagates NegativeCycleError so callers can distinguish the two causes
    if (!(kleene_star(W) == W))
        throw NotKleeneError("matrix is not a Kleene star");
}

HRep hrep(const WeightMatrix& W) {
    require_kleene(W);
    HRep h;
    h.n = W.n;
    for (int i = 1; i <= W.n; ++i)
        for (int j = 1; j <= W.n; ++j)
            if (i != j) h.inequalities.push_back({i, j, W.at(i, j)});
    return h;
}

bool contains_point(const WeightMatrix& W, const std::vector<long long>& x) {
    int n = W.n;
    if (static_cast<int>(x.size()) != n - 1)
        throw DomainError("point must have length n-1");
    auto coord = [&](int i) -> long long { return i == n ? 0 : x[i - 1]; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && coord(i) - coord(j) > W.at(i, j)) return false;
    return true;
}

WeightMatrix permuted(const WeightMatrix& W, const std::vector<int>& perm) {
    WeightMatrix r(W.n, std::vector<long long>(W.n * W.n, 0));
    for (int i = 1; i <= W.n; ++i)
        for (int j = 1; j <= W.n; ++j) r.at(i, j) = W.at(perm[i], perm[j]);
    return r;
}

}  // namespace polytrope
