#pragma once

#include <cstdint>
#include <vector>

#include "polytrope/ehrhart.hpp"
#include "polytrope/tropical.hpp"

namespace polytrope {

// Brute-force verification layer. Everything here counts lattice points by
// direct enumeration and never touches the Groebner pipeline.

inline constexpr long long kDefaultEnumerationCap = 100'000'000;

// |kP intersect Z^{n-1}|: integer points x with -k*c_{ni} <= x_i <= k*c_{in}
// satisfying x_i - x_j <= k*c_ij (x_n = 0). The box is split across OpenMP
// threads; totals are deterministic regardless of the partition.
long long count_lattice_points(const WeightMatrix& W, int k,
                               long long cap = kDefaultEnumerationCap);

// Single-threaded reference implementation with identical semantics.
long long count_lattice_points_serial(const WeightMatrix& W, int k,
                                      long long cap = kDefaultEnumerationCap);

struct DilateCounts {
    std::vector<long long> counts;  // counts[k] for k = 0..K
};

DilateCounts dilate_counts(const WeightMatrix& W, int max_k,
                           long long cap = kDefaultEnumerationCap);

// Exact Lagrange interpolation through (k, |kP|) for k = 0..n-1.
Univariate interpolate_ehrhart(const WeightMatrix& W,
                               long long cap = kDefaultEnumerationCap);

// (n-1)! times the leading coefficient of the interpolated Ehrhart
// polynomial; asserted to be a nonnegative integer.
Integer normalized_volume_bruteforce(const WeightMatrix& W,
                                     long long cap = kDefaultEnumerationCap);

// h*-vector from the dilate counts via the binomial-basis change
// h*_i = sum_j (-1)^{i-j} C(d+1, i-j) ehr(j); entries asserted to be
// nonnegative integers summing to the normalized volume.
std::vector<Integer> hstar_bruteforce(const WeightMatrix& W,
                                      long long cap = kDefaultEnumerationCap);

}  // namespace polytrope
