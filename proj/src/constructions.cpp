#include "turan/constructions.hpp"

#include <chrono>

#include "turan/binom.hpp"

namespace turan {

int extremal_ell(const ExtremalSpec& spec) {
    const bool odd = spec.kind == ExtremalKind::odd_linear || spec.kind == ExtremalKind::odd_minimal;
    return odd ? 2 * spec.t + 1 : 2 * spec.t + 2;
}

bool extremal_is_linear(ExtremalKind kind) {
    return kind == ExtremalKind::odd_linear || kind == ExtremalKind::even_linear;
}

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

void validate_extremal_spec(const ExtremalSpec& spec) {
    if (spec.k < 3 || spec.t < 1 || spec.n < spec.k + spec.t + 2)
        throw std::invalid_argument("extremal specs need k >= 3, t >= 1, n >= k+t+2");
}

}  // namespace

Family construct_star_family(int n, int k, int t, const VertexSet& S) {
    if (S.size() != t) throw std::invalid_argument("star core has size " + std::to_string(S.size()) +
                                                   ", expected t = " + std::to_string(t));
    if (n < 0 || n > VertexSet::max_vertices || k < 1)
        throw std::invalid_argument("invalid star family parameters");
    if (S.max_vertex() > n) throw std::invalid_argument("star core leaves the ground set");
    std::vector<Edge> edges;
    for_each_kset(n, k, [&](const Edge& e) {
        if (e.intersects(S)) edges.push_back(e);
    });
    return make_family(n, k, std::move(edges));
}

Family construct_extremal(const ExtremalSpec& spec) {
    validate_extremal_spec(spec);
    const int n = spec.n, k = spec.k, t = spec.t;
    const VertexSet S = VertexSet::range(1, t);
    Family star = construct_star_family(n, k, t, S);
    switch (spec.kind) {
        case ExtremalKind::odd_linear:
        case ExtremalKind::odd_minimal:
            return star;
        case ExtremalKind::even_linear: {
            if (n - t < k) throw std::invalid_argument("no room for the fixed-pair block");
            std::vector<Edge> edges = star.edges;
            const Edge pair{t + 1, t + 2};
            for_each_kset(n, k, [&](const Edge& e) {
                if (!e.intersects(S) && pair.is_subset_of(e)) edges.push_back(e);
            });
            return make_family(n, k, std::move(edges));
        }
        case ExtremalKind::even_minimal: {
            if (n - t < k) throw std::invalid_argument("no room for the extra k-set");
            std::vector<Edge> edges = star.edges;
            edges.push_back(VertexSet::range(t + 1, t + k));
            return make_family(n, k, std::move(edges));
        }
    }
    throw std::logic_error("unreachable extremal kind");
}

ExFormulaResult ex_formula(TuranFormulaKind kind, int n, int k, int ell) {
    if (n < k || k < 1) throw std::invalid_argument("ex formula needs n >= k >= 1");
    switch (kind) {
        case TuranFormulaKind::linear_cycle: {
            if (k < 5) throw UnsupportedParameters("linear-cycle values are only known for k >= 5");
            if (ell < 3) throw std::invalid_argument("cycles need length >= 3");
            const int t = (ell - 1) / 2;
            std::int64_t v = binom(n, k) - binom(n - t, k);
            if (ell % 2 == 0) v += binom(n - t - 2, k - 2);
            return {v, true};
        }
        case TuranFormulaKind::minimal_cycle: {
            if (ell < 3) throw std::invalid_argument("cycles need length >= 3");
            if (ell == 3) {
                if (k < 3) throw UnsupportedParameters("minimal-triangle values need k >= 3");
                return {binom(n - 1, k - 1), !(2 * n >= 3 * k)};
            }
            if (k < 4) throw UnsupportedParameters("minimal-cycle values for l >= 4 need k >= 4");
            const int t = (ell - 1) / 2;
            std::int64_t v = binom(n, k) - binom(n - t, k);
            if (ell % 2 == 0) v += 1;
            return {v, true};
        }
        case TuranFormulaKind::minimal_path: {
            if (ell != 3) throw UnsupportedParameters("minimal-path values are only known for l = 3");
            if (k < 3) throw UnsupportedParameters("minimal-path values need k >= 3");
            return {binom(n - 1, k - 1), !(n >= 2 * k)};
        }
    }
    throw std::logic_error("unreachable formula kind");
}

FreenessReport verify_extremal_freeness(const ExtremalSpec& spec) {
    validate_extremal_spec(spec);
    FreenessReport rep;
    rep.spec = spec;
    rep.ell = extremal_ell(spec);
    Family fam = construct_extremal(spec);
    rep.family_size = fam.size();
    const CycleKind kind = extremal_is_linear(spec.kind) ? CycleKind::linear : CycleKind::minimal;
    const auto t0 = std::chrono::steady_clock::now();
    auto witness = detail::find_cycle(fam.edges, kind, rep.ell, -1, &rep.nodes);
    rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (witness)
        throw std::logic_error("constructed family contains a forbidden cycle through " +
                               witness->edges.front().to_string());
    rep.free = true;
    return rep;
}

}  // namespace turan
