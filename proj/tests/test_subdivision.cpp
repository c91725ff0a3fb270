#include <doctest.h>

#include <algorithm>

#include "polytrope/cohomology.hpp"
#include "polytrope/subdivision.hpp"
#include "test_util.hpp"

using namespace polytrope;
using namespace polytrope::testutil;

TEST_CASE("fundamental polytope of rank 4") {
    FundamentalPolytope fp = fundamental_polytope(4);
    CHECK(fp.vertices.size() == 12);
    REQUIRE(fp.squares.size() == 6);
    VarSet vs(VarKind::A, 4);
    // every vertex lies on exactly two squares
    std::vector<int> incidence(12, 0);
    for (auto& sq : fp.squares) {
        for (int v : sq.verts) ++incidence[v];
        // diagonals pair opposite corners: indices (i,j) vs (k,l) disjoint
        auto [i1, j1] = vs.pair_of(sq.diagonal0[0]);
        auto [i2, j2] = vs.pair_of(sq.diagonal0[1]);
        CHECK(i1 != i2);
        CHECK(j1 != j2);
        CHECK(i1 != j2);
        CHECK(j1 != i2);
    }
    for (int c : incidence) CHECK(c == 2);
}

TEST_CASE("central triangulation of the 3d example") {
    WeightMatrix W = example_3d_relabeled();
    CentralSubdivision S = central_subdivision(W);
    CHECK(S.is_triangulation);
    CHECK(S.origin_in_every_cell);
    CHECK(S.cells.size() == 20);  // 8 triangles + 6 squares split in two
    for (auto& cell : S.cells) CHECK(cell.size() == 4);
    // unimodular cells covering the cuboctahedron: volume 20 / 3! = 10/3
    CHECK(S.total_cell_volume() == Rational(10, 3));
    // degree sum: T3 sum 12 means sum(7 - deg) = 12 over 12 vertices
    int degsum = 0;
    for (int d : S.degrees) degsum += d;
    CHECK(degsum == 72);
    CHECK(S.diagonals.size() == 6);
    for (auto& d : S.diagonals) CHECK(!d.tie);
}

TEST_CASE("published coefficient correspondence, printed and relabeled") {
    for (const WeightMatrix& W : {example_3d(), example_3d_relabeled()}) {
        VolumePolynomial V = volume_polynomial(W);
        CentralSubdivision S = central_subdivision(W);
        CoefficientReport rep = verify_coefficients_3d(V, S);
        for (auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.pass);
        REQUIRE(rep.partition_sums.size() == 3);
        CHECK(rep.partition_sums[0] == 12);
        CHECK(rep.partition_sums[1] == -108);
        CHECK(rep.partition_sums[2] == 120);
    }
}

TEST_CASE("relabeled example matches the published coefficient values") {
    VolumePolynomial V = volume_polynomial(example_3d_relabeled());
    VarSet vs = V.normalized.vars;
    auto coeff = [&](int i1, int j1, int i2, int j2, int i3, int j3) {
        Monomial m = Monomial::var(vs.index(i1, j1)) *
                     Monomial::var(vs.index(i2, j2)) *
                     Monomial::var(vs.index(i3, j3));
        const Rational* c = V.normalized.coefficient(m);
        return c ? *c : Rational(0);
    };
    CHECK(coeff(1, 2, 1, 2, 1, 2) == 2);   // a12^3
    CHECK(coeff(1, 2, 1, 2, 1, 4) == -3);  // a12^2 a14
    CHECK(coeff(3, 2, 3, 2, 4, 2) == 0);   // a32^2 a42
    CHECK(coeff(3, 1, 3, 2, 4, 1) == 6);   // a31 a32 a41
}

TEST_CASE("diagonal choice follows the lower lift sum") {
    WeightMatrix W = example_3d_relabeled();
    CentralSubdivision S = central_subdivision(W);
    std::vector<long long> h = W.offdiagonal();
    for (size_t s = 0; s < S.diagonals.size(); ++s) {
        const auto& sq = S.fp.squares[s];
        const auto& d = S.diagonals[s];
        long long chosen = h[d.verts[0]] + h[d.verts[1]];
        long long s0 = h[sq.diagonal0[0]] + h[sq.diagonal0[1]];
        long long s1 = h[sq.diagonal1[0]] + h[sq.diagonal1[1]];
        CHECK(chosen == std::min(s0, s1));
        // the chosen diagonal is an edge of the triangulation
        std::vector<int> edge = {d.verts[0], d.verts[1]};
        std::sort(edge.begin(), edge.end());
        CHECK(S.has_face(edge));
    }
}

TEST_CASE("face queries") {
    CentralSubdivision S = central_subdivision(example_3d_relabeled());
    CHECK(S.has_face({S.origin}));
    int faces3 = 0;
    VarSet vs(VarKind::A, 4);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            for (int w = v + 1; w < 12; ++w)
                if (S.has_face({u, v, w})) ++faces3;
    // boundary triangles of the triangulated cuboctahedron
    CHECK(faces3 == 20);
}

TEST_CASE("degenerate weights need not triangulate") {
    std::vector<long long> e(16, 1);
    for (int i = 0; i < 4; ++i) e[i * 4 + i] = 0;
    WeightMatrix ones(4, e);
    CentralSubdivision S = central_subdivision(ones);
    CHECK(S.origin_in_every_cell);
    CHECK(!S.is_triangulation);  // squares stay unsplit, all diagonals tie
    for (auto& d : S.diagonals) CHECK(d.tie);
}
