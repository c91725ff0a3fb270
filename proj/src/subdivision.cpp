#include "polytrope/subdivision.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "polytrope/errors.hpp"
#include "polytrope/io.hpp"

namespace polytrope {

namespace {

// Exact solve of a square rational system; nullopt if singular.
std::optional<std::vector<Rational>> solve(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    size_t r = A.size();
    for (size_t col = 0; col < r; ++col) {
        size_t piv = col;
        while (piv < r && is_zero(A[piv][col])) ++piv;
        if (piv == r) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t row = 0; row < r; ++row) {
            if (row == col || is_zero(A[row][col])) continue;
            Rational f = A[row][col] / A[col][col];
            for (size_t k = col; k < r; ++k) A[row][k] -= f * A[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(r);
    for (size_t i = 0; i < r; ++i) x[i] = b[i] / A[i][i];
    return x;
}

Rational determinant(std::vector<std::vector<Rational>> A) {
    size_t r = A.size();
    Rational det = 1;
    for (size_t col = 0; col < r; ++col) {
        size_t piv = col;
        while (piv < r && is_zero(A[piv][col])) ++piv;
        if (piv == r) return Rational(0);
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col];
        for (size_t row = col + 1; row < r; ++row) {
            if (is_zero(A[row][col])) continue;
            Rational f = A[row][col] / A[col][col];
            for (size_t k = col; k < r; ++k) A[row][k] -= f * A[col][k];
        }
    }
    return det;
}

void combinations(int total, int pick,
                  const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int pos = pick - 1;
        while (pos >= 0 && idx[pos] == total - pick + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < pick; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

FundamentalPolytope fundamental_polytope(int n) {
    if (n < 3) throw DomainError("fundamental polytope needs n >= 3");
    FundamentalPolytope fp;
    fp.n = n;
    VarSet pairs(VarKind::A, n);
    for (int v = 0; v < pairs.size(); ++v) {
        auto [i, j] = pairs.pair_of(v);
        std::vector<long long> pt(n - 1, 0);
        if (i < n) pt[i - 1] += 1;
        if (j < n) pt[j - 1] -= 1;
        fp.vertices.push_back(std::move(pt));
    }
    if (n == 4) {
        for (int a1 = 1; a1 <= 4; ++a1)
            for (int a2 = a1 + 1; a2 <= 4; ++a2) {
                std::vector<int> B;
                for (int b = 1; b <= 4; ++b)
                    if (b != a1 && b != a2) B.push_back(b);
                FundamentalPolytope::Square sq;
                sq.verts = {pairs.index(a1, B[0]), pairs.index(a1, B[1]),
                            pairs.index(a2, B[0]), pairs.index(a2, B[1])};
                sq.diagonal0 = {pairs.index(a1, B[0]), pairs.index(a2, B[1])};
                sq.diagonal1 = {pairs.index(a1, B[1]), pairs.index(a2, B[0])};
                fp.squares.push_back(sq);
            }
    }
    return fp;
}

bool CentralSubdivision::has_face(const std::vector<int>& sorted_pts) const {
    for (const auto& cell : cells)
        if (std::includes(cell.begin(), cell.end(), sorted_pts.begin(),
                          sorted_pts.end()))
            return true;
    return false;
}

Rational CentralSubdivision::total_cell_volume() const {
    if (!is_triangulation)
        throw InternalConsistencyError("cell volume needs a triangulation");
    int d = n - 1;
    Rational total = 0;
    for (const auto& cell : cells) {
        std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                A[r][c] = to_rational(points[cell[r + 1]][c] - points[cell[0]][c]);
        Rational det = determinant(A);
        total += (det < 0 ? Rational(-det) : det) / Rational(factorial(d));
    }
    return total;
}

CentralSubdivision central_subdivision(const WeightMatrix& W) {
    require_kleene(W);
    int n = W.n;
    if (n < 3) throw DomainError("central subdivision needs n >= 3");
    CentralSubdivision S;
    S.n = n;
    S.fp = fundamental_polytope(n);
    S.points = S.fp.vertices;
    S.points.push_back(std::vector<long long>(n - 1, 0));
    S.origin = static_cast<int>(S.points.size()) - 1;

    std::vector<long long> height = W.offdiagonal();
    height.push_back(0);

    int total = static_cast<int>(S.points.size());
    int d = n - 1;
    std::set<std::vector<int>> cells;
    combinations(total, d + 1, [&](const std::vector<int>& sub) {
        // Affine function through the lifted subset: alpha . y + beta = h.
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        for (int p : sub) {
            std::vector<Rational> row;
            for (long long c : S.points[p]) row.push_back(to_rational(c));
            row.push_back(Rational(1));
            A.push_back(std::move(row));
            b.push_back(to_rational(height[p]));
        }
        auto sol = solve(std::move(A), std::move(b));
        if (!sol) return;
        std::vector<int> cell;
        for (int p = 0; p < total; ++p) {
            Rational lift = (*sol)[d];
            for (int c = 0; c < d; ++c) lift += (*sol)[c] * to_rational(S.points[p][c]);
            Rational slack = to_rational(height[p]) - lift;
            if (slack < 0) return;  // not a supporting function of the lower hull
            if (is_zero(slack)) cell.push_back(p);
        }
        cells.insert(std::move(cell));
    });
    S.cells.assign(cells.begin(), cells.end());

    S.is_triangulation = !S.cells.empty();
    S.origin_in_every_cell = !S.cells.empty();
    for (const auto& cell : S.cells) {
        if (static_cast<int>(cell.size()) != d + 1) S.is_triangulation = false;
        if (!std::binary_search(cell.begin(), cell.end(), S.origin))
            S.origin_in_every_cell = false;
    }

    if (S.is_triangulation) {
        std::set<std::pair<int, int>> edges;
        for (const auto& cell : S.cells)
            for (size_t i = 0; i < cell.size(); ++i)
                for (size_t j = i + 1; j < cell.size(); ++j)
                    edges.insert({cell[i], cell[j]});
        S.degrees.assign(S.origin, 0);
        for (auto& [u, v] : edges) {
            if (u < S.origin) ++S.degrees[u];
            if (v < S.origin) ++S.degrees[v];
        }
    }

    for (size_t s = 0; s < S.fp.squares.size(); ++s) {
        const auto& sq = S.fp.squares[s];
        long long s0 = height[sq.diagonal0[0]] + height[sq.diagonal0[1]];
        long long s1 = height[sq.diagonal1[0]] + height[sq.diagonal1[1]];
        CentralSubdivision::Diagonal diag;
        diag.square = static_cast<int>(s);
        diag.tie = s0 == s1;
        diag.verts = s1 < s0 ? sq.diagonal1 : sq.diagonal0;
        S.diagonals.push_back(diag);
    }
    return S;
}

namespace {

Rational coeff_of(const APoly& p, const Monomial& m) {
    const Rational* c = p.coefficient(m);
    return c ? *c : Rational(0);
}

void record(CoefficientReport& rep, const VarSet& vars, const Monomial& m,
            const Rational& expected, const Rational& actual) {
    if (expected == actual) return;
    rep.pass = false;
    if (rep.failures.size() < 20)
        rep.failures.push_back(render_monomial(m, vars) + ": expected " +
                               to_string(expected) + ", got " +
                               to_string(actual));
}

}  // namespace

CoefficientReport verify_coefficients_3d(const VolumePolynomial& V,
                                         const CentralSubdivision& S) {
    CoefficientReport rep;
    if (S.n != 4) throw DomainError("3d coefficient check needs n = 4");
    if (!S.is_triangulation) {
        rep.pass = false;
        rep.failures.push_back("subdivision is not a triangulation");
        return rep;
    }
    VarSet vars = V.normalized.vars;
    int m = vars.size();

    // square containing a pair of vertices, and the chosen diagonal's verts
    std::vector<std::vector<int>> common_square(m, std::vector<int>(m, -1));
    for (size_t s = 0; s < S.fp.squares.size(); ++s)
        for (int u : S.fp.squares[s].verts)
            for (int v : S.fp.squares[s].verts)
                if (u != v) common_square[u][v] = static_cast<int>(s);
    auto on_chosen_diagonal = [&](int sq, int v) {
        const auto& dg = S.diagonals[sq];
        return !dg.tie && (dg.verts[0] == v || dg.verts[1] == v);
    };

    Rational sum_t3 = 0, sum_t21 = 0, sum_t111 = 0;
    for (int v = 0; v < m; ++v) {
        Monomial mono = Monomial::var(v, 3);
        Rational actual = coeff_of(V.normalized, mono);
        sum_t3 += actual;
        record(rep, vars, mono, Rational(7 - S.degrees[v]), actual);
    }
    for (int v = 0; v < m; ++v)
        for (int u = 0; u < m; ++u) {
            if (u == v) continue;
            Monomial mono = Monomial::var(v, 2) * Monomial::var(u);
            Rational actual = coeff_of(V.normalized, mono);
            sum_t21 += actual;
            int sq = common_square[v][u];
            Rational expected =
                sq >= 0 && on_chosen_diagonal(sq, u) ? Rational(-3) : Rational(0);
            record(rep, vars, mono, expected, actual);
        }
    for (int v = 0; v < m; ++v)
        for (int u = v + 1; u < m; ++u)
            for (int w = u + 1; w < m; ++w) {
                Monomial mono =
                    Monomial::var(v) * Monomial::var(u) * Monomial::var(w);
                Rational actual = coeff_of(V.normalized, mono);
                sum_t111 += actual;
                Rational expected =
                    S.has_face({v, u, w}) ? Rational(6) : Rational(0);
                record(rep, vars, mono, expected, actual);
            }

    rep.partition_sums = {sum_t3, sum_t21, sum_t111};
    if (sum_t3 != 12 || sum_t21 != -108 || sum_t111 != 120) {
        rep.pass = false;
        rep.failures.push_back("class sums differ from (12, -108, 120)");
    }
    return rep;
}

CoefficientReport verify_coefficients_4d(const VolumePolynomial& V,
                                         const CentralSubdivision* S) {
    CoefficientReport rep;
    VarSet vars = V.normalized.vars;
    if (vars.n != 5) throw DomainError("4d coefficient check needs n = 5");

    auto partition_of = [](const Monomial& m) {
        std::vector<int> exps;
        for (auto& [v, k] : m.e) exps.push_back(k);
        std::sort(exps.rbegin(), exps.rend());
        if (exps == std::vector<int>{4}) return 0;
        if (exps == std::vector<int>{3, 1}) return 1;
        if (exps == std::vector<int>{2, 2}) return 2;
        if (exps == std::vector<int>{2, 1, 1}) return 3;
        return 4;  // 1+1+1+1
    };
    const std::vector<std::vector<Rational>> allowed = {
        {-6, -3, -2, -1, 0, 1, 2, 3}, {-4, 0, 4, 8}, {0, 6}, {-12, 0, 12},
        {0, 24}};
    rep.partition_sums.assign(5, Rational(0));
    long long minus4 = 0, twelve = 0;
    for (auto& [m, c] : V.normalized.terms) {
        int p = partition_of(m);
        rep.partition_sums[p] += c;
        if (c == -4) ++minus4;
        if (c == 12) ++twelve;
        bool ok = false;
        for (auto& a : allowed[p]) ok = ok || a == c;
        if (!ok) {
            rep.pass = false;
            if (rep.failures.size() < 20)
                rep.failures.push_back(render_monomial(m, vars) +
                                       ": coefficient " + to_string(c) +
                                       " outside the allowed set");
        }
    }
    const std::vector<Rational> target = {-20, 320, 300, -2160, 1680};
    if (rep.partition_sums != target) {
        rep.pass = false;
        rep.failures.push_back(
            "partition sums differ from (-20, 320, 300, -2160, 1680)");
    }
    for (int i = 1; i <= 5; ++i) {
        Monomial row, col;
        for (int j = 1; j <= 5; ++j) {
            if (j == i) continue;
            row = row * Monomial::var(vars.index(i, j));
            col = col * Monomial::var(vars.index(j, i));
        }
        for (const Monomial& m : {row, col})
            if (coeff_of(V.normalized, m) != 24) {
                rep.pass = false;
                rep.failures.push_back(render_monomial(m, vars) +
                                       ": orbit coefficient is not 24");
            }
    }
    if (minus4 != 2 * twelve) {
        rep.pass = false;
        rep.failures.push_back("#(-4) = " + std::to_string(minus4) +
                               " is not twice #(12) = " +
                               std::to_string(twelve));
    }
    if (S && S->is_triangulation) {
        int m = vars.size();
        std::vector<int> quad(4);
        for (quad[0] = 0; quad[0] < m; ++quad[0])
            for (quad[1] = quad[0] + 1; quad[1] < m; ++quad[1])
                for (quad[2] = quad[1] + 1; quad[2] < m; ++quad[2])
                    for (quad[3] = quad[2] + 1; quad[3] < m; ++quad[3]) {
                        Monomial mono;
                        for (int v : quad) mono = mono * Monomial::var(v);
                        bool face = S->has_face(quad);
                        Rational c = coeff_of(V.normalized, mono);
                        if ((c == 24) != face) {
                            rep.pass = false;
                            if (rep.failures.size() < 20)
                                rep.failures.push_back(
                                    render_monomial(mono, vars) +
                                    ": face criterion mismatch");
                        }
                    }
    }
    return rep;
}

}  // namespace polytrope
