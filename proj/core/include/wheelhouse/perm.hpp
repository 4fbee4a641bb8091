#pragma once

#include <vector>
#include <numeric>
#include <stdexcept>

namespace wheelhouse {

// A permutation p of {0..n-1}; p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_perm(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= (int)p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

// p then q: (q*p)[i] = q[p[i]].
inline Perm compose(const Perm& q, const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
    return r;
}

inline int perm_sign(const Perm& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// Sign of the permutation that sorts `keys` stably into ascending order.
template <typename T>
int sort_sign(const std::vector<T>& keys) {
    int s = 1;
    for (size_t i = 0; i < keys.size(); ++i)
        for (size_t j = i + 1; j < keys.size(); ++j)
            if (keys[j] < keys[i]) s = -s;
    return s;
}

// Koszul sign of reordering graded symbols with degrees deg[] by the
// permutation p (symbol at old position i moves to new position p[i]):
// a factor (-1) for every inversion between two odd symbols.
inline int koszul_sign(const Perm& p, const std::vector<int>& deg) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j] && (deg[i] & 1) && (deg[j] & 1)) s = -s;
    return s;
}

} // namespace wheelhouse
