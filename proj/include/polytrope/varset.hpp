#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polytrope/errors.hpp"

namespace polytrope {

enum class VarKind { X, A, T };

// A fixed, totally ordered set of variables. For X and A kinds the variables
// are the off-diagonal pairs (i,j) of [n]^2 sorted lexicographically, so for
// n=3 the order is x12 < x13 < x21 < x23 < x31 < x32. T is the singleton {t}.
struct VarSet {
    VarKind kind = VarKind::X;
    int n = 0;

    VarSet() = default;
    VarSet(VarKind k, int dim) : kind(k), n(dim) {}

    int size() const { return kind == VarKind::T ? 1 : n * n - n; }

    // (i,j) are 1-based, i != j.
    int index(int i, int j) const {
        if (kind == VarKind::T) throw DomainError("t has no pair index");
        if (i < 1 || i > n || j < 1 || j > n || i == j)
            throw DomainError("bad variable pair");
        return (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0);
    }

    std::pair<int, int> pair_of(int v) const {
        if (kind == VarKind::T) throw DomainError("t has no pair index");
        int i = v / (n - 1), r = v % (n - 1);
        int j = r >= i ? r + 1 : r;
        return {i + 1, j + 1};
    }

    std::string name(int v) const {
        if (kind == VarKind::T) return "t";
        auto [i, j] = pair_of(v);
        char prefix = kind == VarKind::X ? 'x' : 'a';
        return prefix + std::to_string(i) + std::to_string(j);
    }

    // Inverse of name(); returns -1 if the token is not a variable of this set.
    int find(const std::string& s) const {
        if (kind == VarKind::T) return s == "t" ? 0 : -1;
        char prefix = kind == VarKind::X ? 'x' : 'a';
        if (s.size() != 3 || s[0] != prefix) return -1;
        int i = s[1] - '0', j = s[2] - '0';
        if (i < 1 || i > n || j < 1 || j > n || i == j) return -1;
        return index(i, j);
    }

    bool operator==(const VarSet&) const = default;
};

}  // namespace polytrope
