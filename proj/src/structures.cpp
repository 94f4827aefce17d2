#include "turan/structures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace turan {

VertexSet Template::support() const {
    VertexSet s;
    for (const Edge& e : edges) s |= e;
    return s;
}

Template make_template(int n, std::vector<Edge> edges) {
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("ground-set size must be in 0.." + std::to_string(VertexSet::max_vertices));
    std::set<Edge> seen;
    for (const Edge& e : edges) {
        if (e.empty()) throw std::invalid_argument("template edges must be nonempty");
        if (e.max_vertex() > n) throw std::invalid_argument("template edge " + e.to_string() + " leaves the ground set");
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate template edge " + e.to_string());
    }
    return Template{n, std::move(edges)};
}

Family gen_linear_path(int k, int ell, int start_vertex) {
    if (k < 2) throw std::invalid_argument("linear paths need k >= 2");
    if (ell < 1) throw std::invalid_argument("linear paths need length >= 1");
    if (start_vertex < 1) throw std::invalid_argument("start vertex must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < ell; ++i) {
        int lo = start_vertex + i * (k - 1);
        edges.push_back(VertexSet::range(lo, lo + k - 1));
    }
    return make_family(start_vertex + ell * (k - 1), k, std::move(edges));
}

Family gen_linear_cycle(int k, int ell) {
    if (k < 2) throw std::invalid_argument("linear cycles need k >= 2");
    if (ell < 3) throw std::invalid_argument("linear cycles need length >= 3");
    const int m = ell * (k - 1);
    std::vector<Edge> edges;
    for (int i = 0; i < ell; ++i) {
        Edge e;
        for (int j = 0; j < k; ++j) e.insert((i * (k - 1) + j) % m + 1);
        edges.push_back(e);
    }
    return make_family(m, k, std::move(edges));
}

Family gen_triangulated_cycle(int ell) {
    if (ell < 3) throw std::invalid_argument("triangulated cycles need length >= 3");
    std::vector<Edge> edges;
    for (int i = 2; i < ell; ++i) edges.push_back(Edge{1, i, i + 1});
    for (int j = 1; j <= ell; ++j) edges.push_back(Edge{j, j % ell + 1, ell + j});
    return make_family(2 * ell, 3, std::move(edges));
}

Family expand(const Template& tmpl, int k, int first_new_vertex) {
    if (k < 1) throw std::invalid_argument("expansion uniformity must be positive");
    for (const Edge& e : tmpl.edges)
        if (e.size() > k)
            throw std::invalid_argument("template edge " + e.to_string() + " larger than k");
    const int top = tmpl.support().max_vertex();
    if (first_new_vertex <= top)
        throw std::invalid_argument("expansion vertices would collide with the template support");
    int next = first_new_vertex;
    std::vector<Edge> edges;
    for (const Edge& e : tmpl.edges) {
        Edge f = e;
        for (int pad = k - e.size(); pad > 0; --pad) f.insert(next++);
        edges.push_back(f);
    }
    return make_family(std::max(tmpl.n, next - 1), k, std::move(edges));
}

namespace detail {

std::vector<int> distinct_representatives(const std::vector<VertexSet>& sets) {
    std::vector<int> picked(sets.size(), 0);
    VertexSet used;
    // Backtracking over small sets; sorted ascending choices keep it canonical.
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == sets.size()) return true;
        bool ok = false;
        sets[i].for_each([&](int v) {
            if (ok || used.contains(v)) return;
            used.insert(v);
            picked[i] = v;
            if (go(i + 1))
                ok = true;
            else
                used.erase(v);
        });
        return ok;
    };
    if (!go(0)) return {};
    return picked;
}

namespace {

bool links_pairwise_disjoint(const std::vector<VertexSet>& links) {
    for (std::size_t i = 0; i < links.size(); ++i)
        for (std::size_t j = i + 1; j < links.size(); ++j)
            if (links[i].intersects(links[j])) return false;
    return true;
}

struct SequenceSearch {
    const std::vector<Edge>& edges;
    bool cyclic;
    bool linear;  // exact one-vertex consecutive overlaps
    int ell;
    int through;
    std::uint64_t* nodes;

    std::vector<int> seq;
    std::vector<VertexSet> union_from0;  // union of edges[seq[0..i]]
    std::vector<VertexSet> union_from1;  // union of edges[seq[1..i]]
    std::optional<std::pair<std::vector<Edge>, std::vector<int>>> found;

    void bump() {
        if (nodes) ++*nodes;
    }

    bool consecutive_ok(const Edge& a, const Edge& b) const {
        const int sz = (a & b).size();
        return linear ? sz == 1 : sz >= 1;
    }

    // Cycle completion: link sets pairwise disjoint, then a vertex system.
    bool complete_cycle() {
        std::vector<VertexSet> links(ell);
        for (int i = 0; i < ell; ++i)
            links[i] = edges[seq[i]] & edges[seq[(i + 1) % ell]];
        if (!links_pairwise_disjoint(links)) return false;
        std::vector<VertexSet> sdr_sets(ell);
        sdr_sets[0] = links[ell - 1];  // v_1
        for (int i = 1; i < ell; ++i) sdr_sets[i] = links[i - 1];
        std::vector<int> vs = distinct_representatives(sdr_sets);
        if (vs.empty()) return false;
        std::vector<Edge> es;
        for (int i : seq) es.push_back(edges[i]);
        found = {std::move(es), std::move(vs)};
        return true;
    }

    bool complete_path() {
        if (through >= 0 && std::find(seq.begin(), seq.end(), through) == seq.end()) return false;
        std::vector<VertexSet> sdr_sets;
        sdr_sets.push_back(edges[seq[0]]);  // v_1
        for (int i = 0; i + 1 < ell; ++i) sdr_sets.push_back(edges[seq[i]] & edges[seq[i + 1]]);
        sdr_sets.push_back(edges[seq[ell - 1]]);  // v_{l+1}
        std::vector<int> vs = distinct_representatives(sdr_sets);
        if (vs.empty()) return false;
        std::vector<Edge> es;
        for (int i : seq) es.push_back(edges[i]);
        found = {std::move(es), std::move(vs)};
        return true;
    }

    bool extend() {
        const int idx = static_cast<int>(seq.size());
        if (idx == ell) return cyclic ? complete_cycle() : complete_path();
        const int m = static_cast<int>(edges.size());
        const bool last = idx == ell - 1;
        for (int c = 0; c < m; ++c) {
            if (std::find(seq.begin(), seq.end(), c) != seq.end()) continue;
            if (cyclic) {
                if (through < 0 && c < seq[0]) continue;  // first edge is the index-least
                if (last && ell >= 3 && c < seq[1]) continue;  // kill the reflection
            } else {
                if (last && c < seq[0]) continue;  // orient the path
            }
            bump();
            const Edge& e = edges[c];
            if (!consecutive_ok(edges[seq[idx - 1]], e)) continue;
            if (cyclic && last && !consecutive_ok(edges[seq[0]], e)) continue;
            if (idx >= 2) {
                const VertexSet& blocked =
                    (cyclic && last) ? union_from1[idx - 2] : union_from0[idx - 2];
                if (e.intersects(blocked)) continue;
            }
            seq.push_back(c);
            union_from0.push_back(union_from0.back() | e);
            union_from1.push_back(idx == 1 ? e : (union_from1.back() | e));
            if (extend()) return true;
            seq.pop_back();
            union_from0.pop_back();
            union_from1.pop_back();
        }
        return false;
    }

    bool run_from(int first) {
        seq = {first};
        union_from0 = {edges[first]};
        union_from1 = {VertexSet{}};
        return extend();
    }
};

// Berge cycles: enumerate the vertex cycle, then match positions to distinct
// covering edges (a system of distinct representatives over edges).
struct BergeSearch {
    const std::vector<Edge>& edges;
    int ell;
    std::uint64_t* nodes;

    std::vector<int> support;
    std::vector<int> vseq;
    std::optional<std::pair<std::vector<Edge>, std::vector<int>>> found;

    std::vector<int> edges_covering(int a, int b) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (edges[i].contains(a) && edges[i].contains(b)) out.push_back(i);
        return out;
    }

    bool match_edges() {
        std::vector<std::vector<int>> cand(ell);
        for (int i = 0; i < ell; ++i) {
            cand[i] = edges_covering(vseq[i], vseq[(i + 1) % ell]);
            if (cand[i].empty()) return false;
        }
        std::map<int, int> owner;  // edge index -> position
        std::function<bool(int, std::set<int>&)> augment = [&](int pos, std::set<int>& vis) -> bool {
            for (int e : cand[pos]) {
                if (vis.count(e)) continue;
                vis.insert(e);
                auto it = owner.find(e);
                if (it == owner.end()) {
                    owner[e] = pos;
                    return true;
                }
                int other = it->second;
                if (augment(other, vis)) {
                    owner[e] = pos;
                    return true;
                }
            }
            return false;
        };
        for (int pos = 0; pos < ell; ++pos) {
            std::set<int> vis;
            if (!augment(pos, vis)) return false;
        }
        std::vector<Edge> es(ell);
        for (const auto& [e, pos] : owner) es[pos] = edges[e];
        found = {std::move(es), vseq};
        return true;
    }

    bool extend() {
        const int idx = static_cast<int>(vseq.size());
        if (idx == ell) {
            // closing pair must also be coverable; match_edges revalidates all
            return match_edges();
        }
        for (int v : support) {
            if (v <= vseq[0]) continue;  // v_1 is the smallest cycle vertex
            if (std::find(vseq.begin(), vseq.end(), v) != vseq.end()) continue;
            if (idx == ell - 1 && ell >= 3 && v < vseq[1]) continue;  // reflection
            if (nodes) ++*nodes;
            if (edges_covering(vseq[idx - 1], v).empty()) continue;
            vseq.push_back(v);
            if (extend()) return true;
            vseq.pop_back();
        }
        return false;
    }

    bool run() {
        VertexSet sup;
        for (const Edge& e : edges) sup |= e;
        support = sup.vertices();
        for (int v : support) {
            vseq = {v};
            if (extend()) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<CycleWitness> find_cycle(const std::vector<Edge>& edges, CycleKind kind, int ell,
                                       int through, std::uint64_t* nodes) {
    if (static_cast<int>(edges.size()) < ell) return std::nullopt;
    if (kind == CycleKind::berge) {
        if (through >= 0) throw std::logic_error("through-edge search is not supported for Berge cycles");
        BergeSearch bs{edges, ell, nodes, {}, {}, {}};
        if (bs.run()) return CycleWitness{bs.found->first, bs.found->second};
        return std::nullopt;
    }
    SequenceSearch ss{edges, true, kind == CycleKind::linear, ell, through, nodes,
                      {},    {},   {},                        {}};
    if (through >= 0) {
        if (ss.run_from(through)) return CycleWitness{ss.found->first, ss.found->second};
        return std::nullopt;
    }
    for (int f = 0; f < static_cast<int>(edges.size()); ++f)
        if (ss.run_from(f)) return CycleWitness{ss.found->first, ss.found->second};
    return std::nullopt;
}

std::optional<PathWitness> find_path(const std::vector<Edge>& edges, bool linear, int ell,
                                     int through, std::uint64_t* nodes) {
    if (static_cast<int>(edges.size()) < ell) return std::nullopt;
    if (ell == 1) {
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (through >= 0 && i != through) continue;
            std::vector<int> vs = distinct_representatives({edges[i], edges[i]});
            if (!vs.empty()) return PathWitness{{edges[i]}, vs};
        }
        return std::nullopt;
    }
    SequenceSearch ss{edges, false, linear, ell, through, nodes, {}, {}, {}, {}};
    for (int f = 0; f < static_cast<int>(edges.size()); ++f)
        if (ss.run_from(f)) return PathWitness{ss.found->first, ss.found->second};
    return std::nullopt;
}

}  // namespace detail

std::optional<CycleWitness> contains_cycle(const Family& family, const CycleSpec& spec) {
    if (spec.k != family.k) throw std::invalid_argument("cycle uniformity does not match the family");
    if (spec.ell < 3) throw std::invalid_argument("cycles need length >= 3");
    return detail::find_cycle(family.edges, spec.kind, spec.ell, -1, nullptr);
}

std::optional<PathWitness> contains_linear_path(const Family& family, int ell) {
    if (ell < 1) throw std::invalid_argument("paths need length >= 1");
    return detail::find_path(family.edges, true, ell, -1, nullptr);
}

std::optional<PathWitness> contains_minimal_path(const Family& family, int ell) {
    if (ell < 1) throw std::invalid_argument("paths need length >= 1");
    return detail::find_path(family.edges, false, ell, -1, nullptr);
}

namespace {

bool adjacent_cyclic(int i, int j, int ell) {
    int d = std::abs(i - j);
    return d == 1 || d == ell - 1;
}

bool distinct_vertices(const std::vector<int>& vs) {
    std::set<int> s(vs.begin(), vs.end());
    return s.size() == vs.size();
}

}  // namespace

bool validate_cycle_witness(const Family& family, const CycleSpec& spec, const CycleWitness& w) {
    const int ell = spec.ell;
    if (static_cast<int>(w.edges.size()) != ell) return false;
    if (static_cast<int>(w.vertices.size()) != ell) return false;
    if (!distinct_vertices(w.vertices)) return false;
    std::set<Edge> dedup(w.edges.begin(), w.edges.end());
    if (static_cast<int>(dedup.size()) != ell) return false;
    for (const Edge& e : w.edges)
        if (!family.contains_edge(e)) return false;
    for (int i = 0; i < ell; ++i) {
        const Edge& e = w.edges[i];
        if (!e.contains(w.vertices[i]) || !e.contains(w.vertices[(i + 1) % ell])) return false;
    }
    if (spec.kind == CycleKind::berge) return true;
    std::vector<VertexSet> links;
    for (int i = 0; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
            VertexSet inter = w.edges[i] & w.edges[j];
            if (adjacent_cyclic(i, j, ell)) {
                if (inter.empty()) return false;
                if (spec.kind == CycleKind::linear && inter.size() != 1) return false;
            } else if (!inter.empty()) {
                return false;
            }
        }
        links.push_back(w.edges[i] & w.edges[(i + 1) % ell]);
    }
    for (std::size_t i = 0; i < links.size(); ++i)
        for (std::size_t j = i + 1; j < links.size(); ++j)
            if (links[i].intersects(links[j])) return false;
    return true;
}

bool validate_path_witness(const Family& family, bool linear, int ell, const PathWitness& w) {
    if (static_cast<int>(w.edges.size()) != ell) return false;
    if (static_cast<int>(w.vertices.size()) != ell + 1) return false;
    if (!distinct_vertices(w.vertices)) return false;
    std::set<Edge> dedup(w.edges.begin(), w.edges.end());
    if (static_cast<int>(dedup.size()) != ell) return false;
    for (const Edge& e : w.edges)
        if (!family.contains_edge(e)) return false;
    for (int i = 0; i < ell; ++i) {
        const Edge& e = w.edges[i];
        if (!e.contains(w.vertices[i]) || !e.contains(w.vertices[i + 1])) return false;
    }
    for (int i = 0; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
            VertexSet inter = w.edges[i] & w.edges[j];
            if (j == i + 1) {
                if (inter.empty()) return false;
                if (linear && inter.size() != 1) return false;
            } else if (!inter.empty()) {
                return false;
            }
        }
    }
    return true;
}

EmbeddingCertificate embed_expansion(const Template& tmpl, const Family& host, int s) {
    const int k = host.k;
    const int t = static_cast<int>(tmpl.edges.size());
    if (s < k * t)
        throw std::invalid_argument("expansion embedding needs s >= k * |template|");
    for (const Edge& e : tmpl.edges) {
        if (e.size() > k) throw std::invalid_argument("template edge " + e.to_string() + " larger than host uniformity");
        if (e.size() == k) {
            if (!host.contains_edge(e))
                throw std::invalid_argument("template k-set " + e.to_string() + " is not a host edge");
        } else if (!kernel_degree_at_least(host, e, s)) {
            throw std::invalid_argument("template edge " + e.to_string() + " has kernel degree " +
                                        std::to_string(kernel_degree(host, e)) + " < " + std::to_string(s));
        }
    }
    VertexSet blocked = tmpl.support();
    EmbeddingCertificate cert;
    for (const Edge& e : tmpl.edges) {
        bool placed = false;
        for (const Edge& f : host.edges) {  // lex order: first eligible is the least
            if (!e.is_subset_of(f)) continue;
            if ((f - e).intersects(blocked)) continue;
            cert.mapped_edges.emplace_back(e, f);
            cert.expansion_vertices |= f - e;
            blocked |= f;
            placed = true;
            break;
        }
        if (!placed)
            throw std::invalid_argument("no host edge extends template edge " + e.to_string() +
                                        " (kernel degree " +
                                        std::to_string(e.size() < k ? kernel_degree(host, e) : 0) + ")");
    }
    return cert;
}

bool validate_embedding(const Template& tmpl, const Family& host, const EmbeddingCertificate& cert) {
    if (cert.mapped_edges.size() != tmpl.edges.size()) return false;
    std::set<Edge> hosts;
    const VertexSet tsup = tmpl.support();
    VertexSet pads;
    for (std::size_t i = 0; i < tmpl.edges.size(); ++i) {
        const auto& [te, he] = cert.mapped_edges[i];
        if (te != tmpl.edges[i]) return false;
        if (!host.contains_edge(he)) return false;
        if (!te.is_subset_of(he)) return false;
        if (!hosts.insert(he).second) return false;
        VertexSet pad = he - te;
        if (pad.intersects(tsup) || pad.intersects(pads)) return false;
        pads |= pad;
    }
    return pads == cert.expansion_vertices;
}

}  // namespace turan
