#pragma once

// Truncation oracles for the chain colimit/limit algorithms. These work on
// the unrolled diagram at depth 3*|S| (|S| = prefix + period + largest set)
// and never look at the production algorithms' internals.

#include "fincat/chains.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace chain_oracles {

using fincat::ChainColimit;
using fincat::ChainLimit;
using fincat::FinSetChain;
using fincat::InverseFinSetChain;

inline int presentation_size(int prefix, int period, int max_size) {
    return prefix + period + std::max(1, max_size);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// depth-D union-find check of a computed colimit: class count at the cycle
// start, class/cocone compatibility on the safe window, commutation and
// surjectivity of the cocones.
inline bool colimit_matches_truncation(const FinSetChain& s, const ChainColimit& got) {
    const int p = static_cast<int>(s.prefix.size());
    const int q = static_cast<int>(s.cycle.size());
    int smax = 0;
    for (int k = 0; k < p + q; ++k) smax = std::max(smax, s.size_at(k));
    const int depth = 3 * presentation_size(p, q, smax);
    if (depth < p + q * smax) throw std::logic_error("oracle depth too shallow");

    std::vector<int> offset(depth + 1, 0);
    for (int k = 0; k < depth; ++k) offset[k + 1] = offset[k] + s.size_at(k);
    UnionFind uf(offset[depth]);
    for (int k = 0; k + 1 < depth; ++k)
        for (int x = 0; x < s.size_at(k); ++x)
            uf.unite(offset[k] + x, offset[k + 1] + s.map_at(k)[x]);

    // cardinality: distinct classes among the cycle-start set
    std::set<int> classes;
    for (int x = 0; x < s.size_at(p); ++x) classes.insert(uf.find(offset[p] + x));
    if (static_cast<int>(classes.size()) != got.size()) return false;

    // cocone commutation everywhere we can see
    for (int k = 0; k + 1 < depth; ++k)
        for (int x = 0; x < s.size_at(k); ++x)
            if (got.cocone(k, x) != got.cocone(k + 1, s.map_at(k)[x])) return false;

    // class structure matches on the safe window
    int safe = std::max(p, depth - q * (smax + 1));
    for (int k = 0; k <= safe; ++k)
        for (int x = 0; x < s.size_at(k); ++x)
            for (int y = 0; y < s.size_at(k); ++y) {
                bool same_uf = uf.find(offset[k] + x) == uf.find(offset[k] + y);
                bool same_impl = got.cocone(k, x) == got.cocone(k, y);
                if (same_uf != same_impl) return false;
            }

    // every colimit element is hit from the cycle-start set
    std::set<int> hit;
    for (int x = 0; x < s.size_at(p); ++x) hit.insert(got.cocone(p, x));
    return static_cast<int>(hit.size()) == got.size();
}

// depth-D compatible-tuple check of a computed inverse limit.
inline bool limit_matches_truncation(const InverseFinSetChain& s, const ChainLimit& got) {
    const int p = static_cast<int>(s.prefix.size());
    const int q = static_cast<int>(s.cycle.size());
    int smax = 0;
    for (int k = 0; k < p + q; ++k) smax = std::max(smax, s.size_at(k));
    const int depth = 3 * presentation_size(p, q, smax);
    if (depth < p + q * smax) throw std::logic_error("oracle depth too shallow");

    // all depth-D compatible tuples, by backward propagation from the top
    std::vector<std::vector<int>> tuples;
    for (int top = 0; top < s.size_at(depth - 1); ++top) {
        std::vector<int> tup(depth);
        tup[depth - 1] = top;
        for (int k = depth - 2; k >= 0; --k) tup[k] = s.map_from_next(k)[tup[k + 1]];
        tuples.push_back(std::move(tup));
    }

    // cardinality: distinct cycle-start components
    std::set<int> starts;
    for (const auto& tup : tuples) starts.insert(tup[p]);
    if (static_cast<int>(starts.size()) != got.size()) return false;

    // projections must themselves be compatible
    for (int th = 0; th < got.size(); ++th)
        for (int k = 0; k + 1 < depth; ++k)
            if (got.projection(k, th) != s.map_from_next(k)[got.projection(k + 1, th)])
                return false;

    // each tuple matches the thread with the same cycle-start component on
    // the safe window
    int safe = std::max(p + 1, depth - q * (smax + 1));
    for (const auto& tup : tuples) {
        int th = -1;
        for (int cand = 0; cand < got.size(); ++cand)
            if (got.projection(p, cand) == tup[p]) { th = cand; break; }
        if (th < 0) return false;
        for (int k = 0; k < safe; ++k)
            if (got.projection(k, th) != tup[k]) return false;
    }
    return true;
}

} // namespace chain_oracles
