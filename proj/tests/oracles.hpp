#pragma once

// Brute-force reference implementations. Everything here recomputes results
// from raw definitions, independent of the library's search paths.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "turan/family.hpp"

namespace oracle {

using turan::Edge;
using turan::Family;
using turan::VertexSet;

// Maximum pairwise-disjoint subcollection by subset DP (<= 20 sets).
inline int max_packing(const std::vector<VertexSet>& sets) {
    const int m = static_cast<int>(sets.size());
    if (m > 20) throw std::invalid_argument("oracle limited to 20 sets");
    std::vector<VertexSet> conflict(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && sets[i].intersects(sets[j])) conflict[i].insert(j + 1);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        bool ok = true;
        int cnt = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            ++cnt;
            for (int j = i + 1; j < m && ok; ++j)
                if ((mask >> j & 1) && conflict[i].contains(j + 1)) ok = false;
        }
        if (ok) best = std::max(best, cnt);
    }
    return best;
}

inline int kernel_degree(const Family& f, const Edge& d) {
    std::vector<VertexSet> petals;
    for (const Edge& e : f.edges)
        if (d.is_subset_of(e)) petals.push_back(e - d);
    return max_packing(petals);
}

// p-shadow by scanning every p-subset of the ground set.
inline std::set<Edge> shadow(const Family& f, int p) {
    std::set<Edge> out;
    std::vector<int> all;
    for (int v = 1; v <= f.n; ++v) all.push_back(v);
    turan::detail::for_each_subset_of_size(all, p, [&](const std::vector<int>& sub) {
        Edge d;
        for (int v : sub) d.insert(v);
        for (const Edge& e : f.edges)
            if (d.is_subset_of(e) && d != e) {
                out.insert(d);
                break;
            }
    });
    return out;
}

// Rank of a pattern straight from the definition.
inline int pattern_rank(int k, const std::vector<unsigned>& members) {
    for (int d = 1; d <= k; ++d) {
        for (unsigned m = 0; m < (1u << k); ++m) {
            if (std::popcount(m) != d) continue;
            bool contained = false;
            for (unsigned b : members)
                if ((m & ~b) == 0) contained = true;
            if (!contained) return d;
        }
    }
    return k;
}

// --- direct configuration checks on an explicit edge tuple ---------------

inline bool distinct_pick(const std::vector<VertexSet>& sets, std::size_t i, VertexSet& used) {
    if (i == sets.size()) return true;
    for (int v : sets[i].vertices()) {
        if (used.contains(v)) continue;
        used.insert(v);
        if (distinct_pick(sets, i + 1, used)) return true;
        used.erase(v);
    }
    return false;
}

inline bool tuple_is_cycle(const std::vector<Edge>& t, bool linear) {
    const int l = static_cast<int>(t.size());
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            const int inter = (t[i] & t[j]).size();
            const bool adjacent = (j - i == 1) || (i == 0 && j == l - 1);
            if (adjacent) {
                if (linear ? inter != 1 : inter < 1) return false;
            } else if (inter != 0) {
                return false;
            }
        }
    std::vector<VertexSet> links(l);
    for (int i = 0; i < l; ++i) links[i] = t[i] & t[(i + 1) % l];
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (links[i].intersects(links[j])) return false;
    VertexSet used;
    return distinct_pick(links, 0, used);
}

inline bool tuple_is_berge_cycle(const std::vector<Edge>& t, const std::vector<int>& vs) {
    const int l = static_cast<int>(t.size());
    std::set<int> dedup(vs.begin(), vs.end());
    if (static_cast<int>(dedup.size()) != l) return false;
    for (int i = 0; i < l; ++i)
        if (!t[i].contains(vs[i]) || !t[i].contains(vs[(i + 1) % l])) return false;
    return true;
}

inline bool tuple_is_path(const std::vector<Edge>& t, bool linear) {
    const int l = static_cast<int>(t.size());
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            const int inter = (t[i] & t[j]).size();
            if (j - i == 1) {
                if (linear ? inter != 1 : inter < 1) return false;
            } else if (inter != 0) {
                return false;
            }
        }
    std::vector<VertexSet> sets;
    sets.push_back(t[0]);
    for (int i = 0; i + 1 < l; ++i) sets.push_back(t[i] & t[i + 1]);
    sets.push_back(t[l - 1]);
    VertexSet used;
    return distinct_pick(sets, 0, used);
}

inline bool tuple_is_berge(const std::vector<Edge>& t) {
    const int l = static_cast<int>(t.size());
    std::vector<VertexSet> links(l);
    for (int i = 0; i < l; ++i) {
        links[i] = t[i] & t[(i + 1) % l];
        if (links[i].empty()) return false;
    }
    VertexSet used;
    return distinct_pick(links, 0, used);
}

inline bool has_berge_brute(const Family& f, int ell) {
    const int m = static_cast<int>(f.edges.size());
    std::vector<int> idx;
    std::function<bool(int)> choose = [&](int depth) -> bool {
        if (depth == ell) {
            std::vector<int> perm(idx.begin() + 1, idx.end());
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<Edge> t{f.edges[idx[0]]};
                for (int p : perm) t.push_back(f.edges[p]);
                if (tuple_is_berge(t)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        const int start = depth == 0 ? 0 : idx.back() + 1;
        for (int i = start; i < m; ++i) {
            idx.push_back(i);
            if (choose(depth + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return choose(0);
}

// All-orderings detector over edge l-tuples.
inline bool has_cycle_brute(const Family& f, bool linear, int ell) {
    const int m = static_cast<int>(f.edges.size());
    std::vector<int> idx;
    std::function<bool(int)> choose = [&](int depth) -> bool {
        if (depth == ell) {
            std::vector<int> perm(idx.begin() + 1, idx.end());
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<Edge> t{f.edges[idx[0]]};
                for (int p : perm) t.push_back(f.edges[p]);
                if (tuple_is_cycle(t, linear)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        const int start = depth == 0 ? 0 : idx.back() + 1;
        for (int i = start; i < m; ++i) {
            idx.push_back(i);
            if (choose(depth + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return choose(0);
}

inline bool has_path_brute(const Family& f, bool linear, int ell) {
    const int m = static_cast<int>(f.edges.size());
    std::vector<int> idx;
    std::function<bool(int)> choose = [&](int depth) -> bool {
        if (depth == ell) {
            std::vector<int> perm = idx;
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<Edge> t;
                for (int p : perm) t.push_back(f.edges[p]);
                if (tuple_is_path(t, linear)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        const int start = depth == 0 ? 0 : idx.back() + 1;
        for (int i = start; i < m; ++i) {
            idx.push_back(i);
            if (choose(depth + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return choose(0);
}

// --- random instances ------------------------------------------------------

inline Family random_family(std::mt19937_64& rng, int n, int k, int max_edges) {
    std::vector<int> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    std::set<Edge> edges;
    std::uniform_int_distribution<int> count(0, max_edges);
    const int target = count(rng);
    for (int tries = 0; tries < 20 * target && static_cast<int>(edges.size()) < target; ++tries) {
        std::vector<int> pick = all;
        std::shuffle(pick.begin(), pick.end(), rng);
        Edge e;
        for (int i = 0; i < k; ++i) e.insert(pick[i]);
        edges.insert(e);
    }
    return turan::make_family(n, k, std::vector<Edge>(edges.begin(), edges.end()));
}

inline Edge random_subset(std::mt19937_64& rng, const Edge& of, int size) {
    std::vector<int> vs = of.vertices();
    std::shuffle(vs.begin(), vs.end(), rng);
    Edge d;
    for (int i = 0; i < size; ++i) d.insert(vs[i]);
    return d;
}

}  // namespace oracle
