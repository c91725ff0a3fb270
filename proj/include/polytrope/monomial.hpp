#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace polytrope {

// Sparse exponent vector: (variable index, exponent) pairs sorted by variable,
// zero exponents never stored.
struct Monomial {
    std::vector<std::pair<int, int>> e;

    static Monomial one() { return {}; }

    static Monomial var(int v, int exp = 1) {
        Monomial m;
        if (exp > 0) m.e.push_back({v, exp});
        return m;
    }

    bool is_one() const { return e.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, k] : e) d += k;
        return d;
    }

    int exponent(int v) const {
        for (auto& [w, k] : e)
            if (w == v) return k;
        return 0;
    }

    long long weight(const std::vector<long long>& w) const {
        long long s = 0;
        for (auto& [v, k] : e) s += w[v] * k;
        return s;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.e.reserve(e.size() + o.e.size());
        auto a = e.begin();
        auto b = o.e.begin();
        while (a != e.end() && b != o.e.end()) {
            if (a->first < b->first)
                r.e.push_back(*a++);
            else if (b->first < a->first)
                r.e.push_back(*b++);
            else {
                r.e.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        r.e.insert(r.e.end(), a, e.end());
        r.e.insert(r.e.end(), b, o.e.end());
        return r;
    }

    bool divides(const Monomial& m) const {
        auto b = m.e.begin();
        for (auto& [v, k] : e) {
            while (b != m.e.end() && b->first < v) ++b;
            if (b == m.e.end() || b->first != v || b->second < k) return false;
        }
        return true;
    }

    // m / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& m) const {
        Monomial r;
        auto b = e.begin();
        for (auto& [v, k] : m.e) {
            int sub = 0;
            while (b != e.end() && b->first < v) ++b;
            if (b != e.end() && b->first == v) sub = b->second;
            if (k - sub > 0) r.e.push_back({v, k - sub});
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        auto a = e.begin();
        auto b = o.e.begin();
        while (a != e.end() && b != o.e.end()) {
            if (a->first < b->first)
                r.e.push_back(*a++);
            else if (b->first < a->first)
                r.e.push_back(*b++);
            else {
                r.e.push_back({a->first, std::max(a->second, b->second)});
                ++a, ++b;
            }
        }
        r.e.insert(r.e.end(), a, e.end());
        r.e.insert(r.e.end(), b, o.e.end());
        return r;
    }

    bool coprime(const Monomial& o) const {
        auto a = e.begin();
        auto b = o.e.begin();
        while (a != e.end() && b != o.e.end()) {
            if (a->first < b->first)
                ++a;
            else if (b->first < a->first)
                ++b;
            else
                return false;
        }
        return true;
    }

    bool operator==(const Monomial&) const = default;
};

// Graded reverse lexicographic: higher total degree is larger; among equal
// degrees, the monomial with the smaller exponent on the last variable where
// they differ is larger. Returns <0, 0, >0 for u<v, u==v, u>v.
inline int grevlex_cmp(const Monomial& u, const Monomial& v) {
    int du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv ? -1 : 1;
    auto a = u.e.rbegin();
    auto b = v.e.rbegin();
    while (a != u.e.rend() && b != v.e.rend()) {
        if (a->first != b->first) {
            // Larger variable index present only on one side: that side has a
            // positive exponent high up, making it smaller.
            return a->first > b->first ? -1 : 1;
        }
        if (a->second != b->second) return a->second > b->second ? -1 : 1;
        ++a, ++b;
    }
    if (a != u.e.rend()) return -1;  // impossible for equal degrees, kept safe
    if (b != v.e.rend()) return 1;
    return 0;
}

// Canonical term iteration order: total degree descending, grevlex descending.
struct CanonicalTermCmp {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_cmp(a, b) > 0;
    }
};

}  // namespace polytrope
