#include "polytrope/oracle.hpp"

#include <omp.h>

#include <string>

#include "polytrope/errors.hpp"

namespace polytrope {

namespace {

struct Box {
    int dim;                        // n - 1
    std::vector<long long> lo, hi;  // per coordinate
    long long size = 1;             // number of integer points
};

Box dilate_box(const WeightMatrix& W, int k, long long cap) {
    require_kleene(W);
    if (k < 0) throw DomainError("dilate must be nonnegative");
    int n = W.n;
    Box box;
    box.dim = n - 1;
    for (int i = 1; i < n; ++i) {
        box.lo.push_back(-static_cast<long long>(k) * W.at(n, i));
        box.hi.push_back(static_cast<long long>(k) * W.at(i, n));
        long long width = box.hi.back() - box.lo.back() + 1;
        if (width <= 0) {
            box.size = 0;
            return box;
        }
        if (width > cap || box.size > cap / width)
            throw ResourceCapError("enumeration box exceeds cap of " +
                                   std::to_string(cap) + " points");
        box.size *= width;
    }
    return box;
}

// Whether (x_1..x_{n-1}, 0) lies in kP.
bool in_dilate(const WeightMatrix& W, int k, const std::vector<long long>& x) {
    int n = W.n;
    auto coord = [&](int i) -> long long { return i == n ? 0 : x[i - 1]; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j &&
                coord(i) - coord(j) > static_cast<long long>(k) * W.at(i, j))
                return false;
    return true;
}

long long count_slice(const WeightMatrix& W, int k, const Box& box,
                      long long first) {
    // Odometer over the remaining coordinates.
    std::vector<long long> x(box.dim);
    x[0] = first;
    for (int i = 1; i < box.dim; ++i) x[i] = box.lo[i];
    long long total = 0;
    while (true) {
        if (in_dilate(W, k, x)) ++total;
        int pos = box.dim - 1;
        while (pos >= 1) {
            if (++x[pos] <= box.hi[pos]) break;
            x[pos] = box.lo[pos];
            --pos;
        }
        if (pos < 1) break;
    }
    return total;
}

}  // namespace

long long count_lattice_points_serial(const WeightMatrix& W, int k,
                                      long long cap) {
    Box box = dilate_box(W, k, cap);
    if (box.size == 0) return 0;
    long long total = 0;
    for (long long v = box.lo[0]; v <= box.hi[0]; ++v)
        total += count_slice(W, k, box, v);
    return total;
}

long long count_lattice_points(const WeightMatrix& W, int k, long long cap) {
    Box box = dilate_box(W, k, cap);
    if (box.size == 0) return 0;
    long long lo = box.lo[0], hi = box.hi[0];
    long long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long long v = lo; v <= hi; ++v) total += count_slice(W, k, box, v);
    return total;
}

DilateCounts dilate_counts(const WeightMatrix& W, int max_k, long long cap) {
    DilateCounts dc;
    for (int k = 0; k <= max_k; ++k)
        dc.counts.push_back(count_lattice_points(W, k, cap));
    return dc;
}

Univariate interpolate_ehrhart(const WeightMatrix& W, long long cap) {
    int d = W.n - 1;
    DilateCounts dc = dilate_counts(W, d, cap);
    // Lagrange interpolation through (k, counts[k]) for k = 0..d.
    Univariate result;
    for (int k = 0; k <= d; ++k) {
        Univariate basis{Rational(1)};
        Rational denom = 1;
        for (int j = 0; j <= d; ++j) {
            if (j == k) continue;
            basis = uni_mul(basis, Univariate{Rational(-j), Rational(1)});
            denom *= Rational(k - j);
        }
        Univariate term;
        for (auto& b : basis)
            term.push_back(b * to_rational(dc.counts[k]) / denom);
        result = uni_add(result, term);
    }
    return result;
}

Integer normalized_volume_bruteforce(const WeightMatrix& W, long long cap) {
    Univariate ehr = interpolate_ehrhart(W, cap);
    int d = W.n - 1;
    Rational lead = static_cast<int>(ehr.size()) > d ? ehr[d] : Rational(0);
    Rational vol = lead * Rational(factorial(d));
    if (!is_integer(vol) || vol < 0)
        throw InternalConsistencyError(
            "brute-force normalized volume is not a nonnegative integer");
    return vol.get_num();
}

std::vector<Integer> hstar_bruteforce(const WeightMatrix& W, long long cap) {
    int d = W.n - 1;
    DilateCounts dc = dilate_counts(W, d, cap);
    std::vector<Integer> h(d + 1);
    Integer sum = 0;
    for (int i = 0; i <= d; ++i) {
        Rational hi = 0;
        for (int j = 0; j <= i; ++j) {
            Rational term = Rational(binomial(d + 1, i - j)) *
                            to_rational(dc.counts[j]);
            hi += (i - j) % 2 == 0 ? term : -term;
        }
        if (!is_integer(hi) || hi < 0)
            throw InternalConsistencyError(
                "brute-force h* entry is not a nonnegative integer");
        h[i] = hi.get_num();
        sum += h[i];
    }
    if (sum != normalized_volume_bruteforce(W, cap))
        throw InternalConsistencyError(
            "brute-force h* entries do not sum to the normalized volume");
    return h;
}

}  // namespace polytrope
