#include "turan/search.hpp"

#include <algorithm>
#include <array>

#include "turan/binom.hpp"
#include "turan/delta.hpp"

namespace turan {

namespace {

void for_each_kset(int n, int k, const std::function<void(const Edge&)>& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        Edge e;
        for (int v : idx) e.insert(v);
        f(e);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct TuranSearch {
    const ForbiddenSpec& spec;
    std::vector<Edge> candidates;
    std::uint64_t budget;

    std::vector<Edge> current;
    std::vector<Edge> best;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::int64_t cap;  // global size cap from the generic cycle bound

    bool forbidden_through_last() {
        const int through = static_cast<int>(current.size()) - 1;
        switch (spec.kind) {
            case ForbiddenKind::linear_cycle:
                return detail::find_cycle(current, CycleKind::linear, spec.ell, through, nullptr).has_value();
            case ForbiddenKind::minimal_cycle:
                return detail::find_cycle(current, CycleKind::minimal, spec.ell, through, nullptr).has_value();
            case ForbiddenKind::linear_path:
                return detail::find_path(current, true, spec.ell, through, nullptr).has_value();
            case ForbiddenKind::minimal_path:
                return detail::find_path(current, false, spec.ell, through, nullptr).has_value();
        }
        return false;
    }

    void dfs(std::size_t idx) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (current.size() > best.size()) best = current;
        if (idx == candidates.size()) return;
        const std::int64_t remaining = static_cast<std::int64_t>(candidates.size() - idx);
        const std::int64_t ceiling = std::min<std::int64_t>(
            static_cast<std::int64_t>(current.size()) + remaining, cap);
        if (ceiling <= static_cast<std::int64_t>(best.size())) return;
        current.push_back(candidates[idx]);
        const bool ok = !forbidden_through_last();
        if (ok) dfs(idx + 1);
        current.pop_back();
        if (aborted) return;
        if (idx == 0) return;  // relabeling: the first included edge is {1..k}
        dfs(idx + 1);
    }
};

bool family_is_free(const Family& fam, const ForbiddenSpec& spec) {
    switch (spec.kind) {
        case ForbiddenKind::linear_cycle:
            return !contains_cycle(fam, CycleSpec{CycleKind::linear, spec.ell, fam.k});
        case ForbiddenKind::minimal_cycle:
            return !contains_cycle(fam, CycleSpec{CycleKind::minimal, spec.ell, fam.k});
        case ForbiddenKind::linear_path:
            return !contains_linear_path(fam, spec.ell);
        case ForbiddenKind::minimal_path:
            return !contains_minimal_path(fam, spec.ell);
    }
    return false;
}

}  // namespace

SearchResult exact_turan(int n, int k, const ForbiddenSpec& forbidden, std::uint64_t budget) {
    if (forbidden.k != k) throw std::invalid_argument("forbidden uniformity differs from the search");
    const bool cycle = forbidden.kind == ForbiddenKind::linear_cycle ||
                       forbidden.kind == ForbiddenKind::minimal_cycle;
    if (cycle && forbidden.ell < 3) throw std::invalid_argument("cycles need length >= 3");
    if (!cycle && forbidden.ell < 2) throw std::invalid_argument("forbidden paths need length >= 2");
    if (budget < 1) throw std::invalid_argument("node budget must be positive");
    if (n < 0 || n > VertexSet::max_vertices || k < 1)
        throw std::invalid_argument("invalid search parameters");

    TuranSearch search{forbidden, {}, budget, {}, {}, 0, false, 0};
    for_each_kset(n, k, [&](const Edge& e) { search.candidates.push_back(e); });
    search.cap = cycle ? (static_cast<std::int64_t>(k) * forbidden.ell - 1) * binom(n, k - 1)
                       : static_cast<std::int64_t>(search.candidates.size());
    search.dfs(0);

    SearchResult res;
    res.value = static_cast<std::int64_t>(search.best.size());
    res.certificate = make_family(n, k, search.best);
    res.nodes_explored = search.nodes;
    res.proven_optimal = !search.aborted;
    if (!family_is_free(res.certificate, forbidden))
        throw std::logic_error("search certificate contains a forbidden configuration");
    return res;
}

BoundReport upper_bound_sanity(const Family& family, int ell) {
    if (ell < 3) throw std::invalid_argument("cycle bounds need length >= 3");
    BoundReport rep;
    rep.family_size = family.size();
    rep.cycle_bound = (static_cast<std::int64_t>(family.k) * ell - 1) * binom(family.n, family.k - 1);
    std::int64_t tightest = rep.cycle_bound;
    if (family.k == 3) {
        rep.triple_bound = (2 * static_cast<std::int64_t>(ell) - 3) * binom(family.n, 2);
        tightest = std::min(tightest, *rep.triple_bound);
    }
    rep.slack = tightest - rep.family_size;
    if (rep.slack < 0)
        throw std::logic_error("cycle-free size bound violated; freeness verification is broken");
    return rep;
}

Decomposition decompose_relative(const Family& family, int s, const VertexSet& S, int ell) {
    if (ell < 1) throw std::invalid_argument("degree split needs ell >= 1");
    Decomposition dec;
    dec.S = S;
    dec.W = maximal_core_extension(family, s, S);
    dec.Z = VertexSet::range(1, family.n) - S - dec.W;
    std::vector<Edge> g0, g1, g2;
    for (const Edge& e : family.edges) {
        if (e.intersects(S)) {
            ++dec.meets_s;
            continue;
        }
        const int w_hits = (e & dec.W).size();
        if (w_hits == 0)
            g0.push_back(e);
        else if (w_hits == 1)
            g1.push_back(e);
        else
            g2.push_back(e);
    }
    dec.g0 = make_family(family.n, family.k, g0);
    dec.g1 = make_family(family.n, family.k, g1);
    dec.g2 = make_family(family.n, family.k, g2);

    std::vector<Edge> a, b;
    for (const Edge& e : dec.g1.edges) {
        const Edge z_part = e - dec.W;
        std::int64_t deg = 0;
        for (const Edge& f : dec.g1.edges)
            if (z_part.is_subset_of(f)) ++deg;
        if (deg < ell)
            a.push_back(e);
        else
            b.push_back(e);
    }
    dec.a = make_family(family.n, family.k, a);
    dec.b = make_family(family.n, family.k, b);

    // absent k-sets with one vertex in S, one in Z and the rest in W
    std::vector<Edge> d;
    if (family.k >= 2 && dec.W.size() >= family.k - 2) {
        const std::vector<int> ws = dec.W.vertices();
        S.for_each([&](int x) {
            dec.Z.for_each([&](int z) {
                detail::for_each_subset_of_size(ws, family.k - 2, [&](const std::vector<int>& mid) {
                    Edge e{x, z};
                    for (int v : mid) e.insert(v);
                    if (!family.contains_edge(e)) d.push_back(e);
                });
            });
        });
    }
    dec.d = make_family(family.n, family.k, std::move(d));
    return dec;
}

StabilityCover stability_cover(const Family& family, int t) {
    if (t < 1) throw std::invalid_argument("cover size must be positive");
    StabilityCover out;
    std::vector<char> covered(family.edges.size(), 0);
    for (int round = 0; round < t; ++round) {
        std::array<std::int64_t, VertexSet::max_vertices + 1> gain{};
        for (std::size_t i = 0; i < family.edges.size(); ++i)
            if (!covered[i]) family.edges[i].for_each([&](int v) { ++gain[v]; });
        int pick = 0;
        for (int v = 1; v <= family.n; ++v)
            if (!out.S.contains(v) && (pick == 0 || gain[v] > gain[pick])) pick = v;
        if (pick == 0) break;
        out.S.insert(pick);
        for (std::size_t i = 0; i < family.edges.size(); ++i)
            if (family.edges[i].contains(pick)) covered[i] = 1;
    }
    for (char c : covered)
        if (!c) ++out.uncovered;
    const std::int64_t total = binom(family.n, family.k);
    out.uncovered_fraction = total > 0 ? static_cast<double>(out.uncovered) / static_cast<double>(total) : 0.0;
    return out;
}

}  // namespace turan
