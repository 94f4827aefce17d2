#include "turan/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "turan/binom.hpp"

namespace turan {

bool Family::contains_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

VertexSet Family::support() const {
    VertexSet s;
    for (const Edge& e : edges) s |= e;
    return s;
}

Family make_family(int n, int k, std::vector<Edge> edges) {
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("ground-set size must be in 0.." +
                                    std::to_string(VertexSet::max_vertices));
    if (k < 1) throw std::invalid_argument("uniformity k must be positive");
    for (const Edge& e : edges) {
        if (e.size() != k) throw std::invalid_argument("edge " + e.to_string() + " is not a " + std::to_string(k) + "-set");
        if (e.max_vertex() > n) throw std::invalid_argument("edge " + e.to_string() + " leaves the ground set [" + std::to_string(n) + "]");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Family{n, k, std::move(edges)};
}

Family family_from_lists(int n, int k, const std::vector<std::vector<int>>& lists) {
    std::vector<Edge> es;
    es.reserve(lists.size());
    for (const auto& l : lists) {
        Edge e;
        for (int v : l) e.insert(v);
        es.push_back(e);
    }
    return make_family(n, k, std::move(es));
}

namespace detail {

void for_each_subset_of_size(const std::vector<int>& items, int p,
                             const std::function<void(const std::vector<int>&)>& f) {
    const int m = static_cast<int>(items.size());
    if (p < 0 || p > m) return;
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> cur(p);
    while (true) {
        for (int i = 0; i < p; ++i) cur[i] = items[idx[i]];
        f(cur);
        int i = p - 1;
        while (i >= 0 && idx[i] == m - p + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
}

namespace {

// Branch and bound over pairwise-disjoint subcollections. Sets are explored
// in ascending conflict-weight order; the bound is
// chosen + min(#remaining, support/min_size).
struct PackingSearch {
    std::vector<VertexSet> sets;
    int min_size = 1;
    int best = 0;
    int target = -1;  // -1: exact maximum; otherwise stop once reached
    bool done = false;

    explicit PackingSearch(const std::vector<VertexSet>& in, int tgt) : target(tgt) {
        std::map<int, std::int64_t> vertex_count;
        for (const auto& s : in) s.for_each([&](int v) { ++vertex_count[v]; });
        std::vector<std::pair<std::int64_t, VertexSet>> weighted;
        weighted.reserve(in.size());
        for (const auto& s : in) {
            std::int64_t w = 0;
            s.for_each([&](int v) { w += vertex_count[v]; });
            weighted.emplace_back(w, s);
        }
        std::sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        sets.reserve(weighted.size());
        min_size = VertexSet::max_vertices;
        for (auto& [w, s] : weighted) {
            sets.push_back(s);
            min_size = std::min(min_size, s.size());
        }
        if (sets.empty()) min_size = 1;
    }

    int greedy() const {
        VertexSet used;
        int c = 0;
        for (const auto& s : sets) {
            if (!s.intersects(used)) {
                used |= s;
                ++c;
            }
        }
        return c;
    }

    int upper_bound(const std::vector<int>& avail) const {
        VertexSet sup;
        for (int i : avail) sup |= sets[i];
        return std::min<int>(static_cast<int>(avail.size()), sup.size() / min_size);
    }

    void dfs(const std::vector<int>& avail, int chosen) {
        if (chosen > best) best = chosen;
        if (target > 0 && best >= target) {
            done = true;
            return;
        }
        if (avail.empty()) return;
        const int ub_support = upper_bound(avail);
        for (std::size_t i = 0; i < avail.size(); ++i) {
            const int rem = static_cast<int>(avail.size() - i);
            const int ub = chosen + std::min(rem, ub_support);
            if (ub <= best) return;
            if (target > 0 && ub < target) return;
            const VertexSet& picked = sets[avail[i]];
            std::vector<int> child;
            child.reserve(avail.size() - i - 1);
            for (std::size_t j = i + 1; j < avail.size(); ++j)
                if (!sets[avail[j]].intersects(picked)) child.push_back(avail[j]);
            dfs(child, chosen + 1);
            if (done) return;
        }
    }

    int run() {
        best = greedy();
        if (target > 0 && best >= target) return best;
        std::vector<int> all(sets.size());
        std::iota(all.begin(), all.end(), 0);
        if (best < upper_bound(all)) dfs(all, 0);
        return best;
    }
};

std::vector<VertexSet> link_petals(const Family& family, const Edge& d) {
    std::vector<VertexSet> petals;
    for (const Edge& e : family.edges)
        if (d.is_subset_of(e)) petals.push_back(e - d);
    return petals;
}

}  // namespace

int max_set_packing(const std::vector<VertexSet>& sets) {
    return PackingSearch(sets, -1).run();
}

bool packing_at_least(const std::vector<VertexSet>& sets, int target) {
    if (target <= 0) return true;
    if (static_cast<int>(sets.size()) < target) return false;
    return PackingSearch(sets, target).run() >= target;
}

}  // namespace detail

std::vector<Edge> shadow_p(const Family& family, int p) {
    if (p < 0) throw std::invalid_argument("shadow order must be non-negative");
    if (p >= family.k) throw std::invalid_argument("shadow uses proper subsets only (p < k)");
    if (family.edges.empty()) return {};
    if (p == 0) return {Edge{}};
    std::set<Edge> out;
    for (const Edge& e : family.edges) {
        detail::for_each_subset_of_size(e.vertices(), p, [&](const std::vector<int>& sub) {
            Edge d;
            for (int v : sub) d.insert(v);
            out.insert(d);
        });
    }
    return std::vector<Edge>(out.begin(), out.end());
}

std::int64_t degree(const Family& family, const Edge& d) {
    std::int64_t c = 0;
    for (const Edge& e : family.edges)
        if (d.is_subset_of(e)) ++c;
    return c;
}

int kernel_degree(const Family& family, const Edge& d) {
    if (d.size() >= family.k)
        throw std::invalid_argument("kernel degree requires |d| < k");
    return detail::max_set_packing(detail::link_petals(family, d));
}

bool kernel_degree_at_least(const Family& family, const Edge& d, int s) {
    if (s < 1) throw std::invalid_argument("kernel threshold must be positive");
    if (d.size() >= family.k)
        throw std::invalid_argument("kernel degree requires |d| < k");
    return detail::packing_at_least(detail::link_petals(family, d), s);
}

bool KernelOracle::at_least(const Edge& d) {
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    const bool v = d.size() < family_->k && kernel_degree_at_least(*family_, d, s_);
    memo_.emplace(d, v);
    return v;
}

KernelGraph kernel_graph(const Family& family, int s, std::optional<int> r) {
    if (s < 1) throw std::invalid_argument("kernel threshold must be positive");
    if (r && (*r < 1 || *r >= family.k))
        throw std::invalid_argument("kernel size restriction r must satisfy 1 <= r <= k-1");
    std::set<Edge> candidates;
    if (!r && !family.edges.empty()) candidates.insert(Edge{});
    for (const Edge& e : family.edges) {
        const std::vector<int> vs = e.vertices();
        const int lo = r ? *r : 1;
        const int hi = r ? *r : family.k - 1;
        for (int p = lo; p <= hi; ++p) {
            detail::for_each_subset_of_size(vs, p, [&](const std::vector<int>& sub) {
                Edge d;
                for (int v : sub) d.insert(v);
                candidates.insert(d);
            });
        }
    }
    KernelGraph kg;
    kg.threshold_s = s;
    for (const Edge& d : candidates)
        if (kernel_degree_at_least(family, d, s)) kg.members.push_back(d);
    return kg;
}

KruskalKatonaResult kruskal_katona_check(const Family& family, int p) {
    if (family.edges.empty()) throw std::invalid_argument("shadow bound needs a nonempty family");
    if (p < 1 || p > family.k) throw std::invalid_argument("shadow bound needs 1 <= p <= k");
    KruskalKatonaResult res;
    const double m = static_cast<double>(family.size());
    res.x = invert_binom(m, family.k, static_cast<double>(family.n + family.k));
    res.bound = binom_real(res.x, p);
    res.shadow_size = (p == family.k) ? m : static_cast<double>(shadow_p(family, p).size());
    res.holds = res.shadow_size >= res.bound - 1e-6;
    return res;
}

int matching_number(const Family& family) {
    if (family.edges.empty()) return 0;
    return kernel_degree(family, Edge{});
}

PeelResult peel_low_codegree(const Family& family, int low) {
    if (family.k != 3) throw std::invalid_argument("pair peeling is defined for 3-uniform families");
    if (low < 1) throw std::invalid_argument("peeling threshold must be positive");
    std::vector<Edge> current = family.edges;
    std::int64_t removed = 0;
    while (true) {
        std::map<Edge, int> pair_degree;
        for (const Edge& e : current) {
            detail::for_each_subset_of_size(e.vertices(), 2, [&](const std::vector<int>& sub) {
                Edge d;
                d.insert(sub[0]);
                d.insert(sub[1]);
                ++pair_degree[d];
            });
        }
        const Edge* victim = nullptr;
        for (const auto& [pair, deg] : pair_degree) {
            if (deg >= 1 && deg <= low) {
                victim = &pair;
                break;  // map order is lex order
            }
        }
        if (!victim) break;
        std::vector<Edge> next;
        next.reserve(current.size());
        for (const Edge& e : current) {
            if (victim->is_subset_of(e))
                ++removed;
            else
                next.push_back(e);
        }
        current = std::move(next);
    }
    return PeelResult{make_family(family.n, family.k, std::move(current)), removed};
}

}  // namespace turan
