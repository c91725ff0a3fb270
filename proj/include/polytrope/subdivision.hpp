#pragma once

#include <array>
#include <string>
#include <vector>

#include "polytrope/cohomology.hpp"
#include "polytrope/tropical.hpp"

namespace polytrope {

// conv{e_i - e_j} in the hyperplane sum(x)=0, handled in the lattice-
// preserving chart that drops the last coordinate. Vertex v corresponds to
// the pair (i,j) in canonical VarSet order.
struct FundamentalPolytope {
    int n = 0;
    std::vector<std::vector<long long>> vertices;  // projected, length n-1

    // Square facets, n=4 only: (A, B=[4]\A) ordered pairs of 2-subsets.
    struct Square {
        std::array<int, 4> verts;      // v(a1,b1), v(a1,b2), v(a2,b1), v(a2,b2)
        std::array<int, 2> diagonal0;  // v(a1,b1), v(a2,b2)
        std::array<int, 2> diagonal1;  // v(a1,b2), v(a2,b1)
    };
    std::vector<Square> squares;
};

FundamentalPolytope fundamental_polytope(int n);

// Regular central subdivision of FP_n induced by lifting e_i - e_j to height
// c_ij and the origin to 0: the maximal lower-hull cells of the lift.
struct CentralSubdivision {
    int n = 0;
    int origin = 0;  // point index of the lifted origin (= n^2 - n)
    std::vector<std::vector<int>> cells;  // sorted point indices per cell
    bool is_triangulation = false;        // every cell a simplex
    bool origin_in_every_cell = false;

    struct Diagonal {
        int square = 0;
        std::array<int, 2> verts{};  // chosen triangulating edge
        bool tie = false;            // both diagonal lift-sums equal
    };
    std::vector<Diagonal> diagonals;  // per square facet, n=4 only
    std::vector<int> degrees;  // subdivision edge-degree per FP vertex

    bool has_face(const std::vector<int>& sorted_pts) const;

    // Exact total Euclidean volume of the cells (triangulations only).
    Rational total_cell_volume() const;

    FundamentalPolytope fp;
    std::vector<std::vector<long long>> points;  // projected, incl. origin
};

CentralSubdivision central_subdivision(const WeightMatrix& W);

struct CoefficientReport {
    bool pass = true;
    std::vector<std::string> failures;      // first mismatching monomials
    std::vector<Rational> partition_sums;   // 3d: T3, T21, T111; 4d: 5 sums
};

// Checks every degree-3 coefficient of V.normalized against the subdivision
// formula for its exponent partition and the class sums (12, -108, 120).
CoefficientReport verify_coefficients_3d(const VolumePolynomial& V,
                                         const CentralSubdivision& S);

// Table-driven checks for n=5 coefficients: allowed sets per partition, the
// five partition sums (-20, 320, 300, -2160, 1680), the row/column-product
// orbit coefficient 24, #(-4) = 2*#(12), and (when cells are available) the
// 1+1+1+1 face criterion.
CoefficientReport verify_coefficients_4d(const VolumePolynomial& V,
                                         const CentralSubdivision* S);

}  // namespace polytrope
