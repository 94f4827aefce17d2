#include "turan/delta.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace turan {

int KPartition::part_of(int v) const {
    for (int i = 0; i < k(); ++i)
        if (parts[i].contains(v)) return i + 1;
    return 0;
}

KPartition make_kpartition(std::vector<VertexSet> parts) {
    VertexSet seen;
    for (const auto& p : parts) {
        if (p.intersects(seen)) throw std::invalid_argument("partition parts overlap");
        seen |= p;
    }
    return KPartition{std::move(parts)};
}

bool IntersectionPattern::contains(IndexSet m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

IntersectionPattern make_pattern(int k, std::vector<IndexSet> members) {
    if (k < 1 || k > 16) throw std::invalid_argument("pattern arity must be in 1..16");
    const IndexSet full = (IndexSet{1} << k) - 1;
    for (IndexSet m : members) {
        if (m & ~full) throw std::invalid_argument("pattern member leaves [k]");
        if (m == full) throw std::invalid_argument("pattern members must be proper subsets of [k]");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return IntersectionPattern{k, std::move(members)};
}

std::vector<Edge> intersection_structure(const Edge& f, const Family& family) {
    if (!family.contains_edge(f)) throw std::invalid_argument("edge " + f.to_string() + " is not in the family");
    std::set<Edge> out;
    for (const Edge& e : family.edges)
        if (e != f) out.insert(e & f);
    return std::vector<Edge>(out.begin(), out.end());
}

IndexSet project(const VertexSet& s, const KPartition& partition) {
    IndexSet m = 0;
    for (int i = 0; i < partition.k(); ++i)
        if (s.intersects(partition.parts[i])) m |= IndexSet{1} << i;
    return m;
}

int pattern_rank(const IntersectionPattern& pattern) {
    const int k = pattern.k;
    const IndexSet full = (IndexSet{1} << k) - 1;
    for (int d = 1; d <= k; ++d) {
        for (IndexSet m = 1; m <= full; ++m) {
            if (std::popcount(m) != d) continue;
            bool contained = false;
            for (IndexSet b : pattern.members)
                if ((m & ~b) == 0) {
                    contained = true;
                    break;
                }
            if (!contained) return d;
        }
    }
    return k;  // unreachable: [k] itself is never inside a proper member
}

IntersectionPattern close_under_intersection(const IntersectionPattern& pattern) {
    std::set<IndexSet> out(pattern.members.begin(), pattern.members.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<IndexSet> cur(out.begin(), out.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (out.insert(cur[i] & cur[j]).second) grew = true;
    }
    return IntersectionPattern{pattern.k, std::vector<IndexSet>(out.begin(), out.end())};
}

bool is_intersection_closed(const IntersectionPattern& pattern) {
    for (std::size_t i = 0; i < pattern.members.size(); ++i)
        for (std::size_t j = i + 1; j < pattern.members.size(); ++j)
            if (!pattern.contains(pattern.members[i] & pattern.members[j])) return false;
    return true;
}

PatternClassification classify_pattern(const IntersectionPattern& pattern) {
    PatternClassification out;
    IntersectionPattern L = pattern;
    if (!is_intersection_closed(L)) {
        L = close_under_intersection(L);
        out.normalized = true;
    }
    const int k = L.k;
    const IndexSet full = (IndexSet{1} << k) - 1;
    out.rank = pattern_rank(L);
    if (out.rank == k) {
        out.type = PatternClassification::Type::rank_k;
        return out;
    }
    if (out.rank <= k - 2) {
        out.type = PatternClassification::Type::low_rank;
        return out;
    }
    // rank k-1: central elements are those whose every containing proper
    // subset lies in the pattern.
    for (int x = 1; x <= k; ++x) {
        const IndexSet xbit = IndexSet{1} << (x - 1);
        bool central = true;
        for (IndexSet m = xbit; m < full && central; ++m)
            if ((m & xbit) && !L.contains(m)) central = false;
        if (central) {
            out.type = PatternClassification::Type::type1;
            out.central = x;
            return out;
        }
    }
    std::vector<int> tail, head;
    for (int x = 1; x <= k; ++x) {
        if (L.contains(full & ~(IndexSet{1} << (x - 1))))
            tail.push_back(x);
        else
            head.push_back(x);
    }
    if (head.empty() || head.size() == 1)
        throw std::logic_error("rank k-1 pattern with no type-2 split; classification bug");
    for (std::size_t i = 0; i < head.size(); ++i)
        for (std::size_t j = i + 1; j < head.size(); ++j) {
            const IndexSet m = full & ~(IndexSet{1} << (head[i] - 1)) & ~(IndexSet{1} << (head[j] - 1));
            if (!L.contains(m))
                throw std::logic_error("closed rank k-1 pattern misses a head-pair complement");
        }
    out.type = PatternClassification::Type::type2;
    out.head = std::move(head);
    out.tail = std::move(tail);
    return out;
}

std::optional<std::array<int, 3>> find_kernel_triple(const IntersectionPattern& pattern) {
    const int k = pattern.k;
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
            for (int c = b + 1; c <= k; ++c) {
                const IndexSet s = (IndexSet{1} << (a - 1)) | (IndexSet{1} << (b - 1)) | (IndexSet{1} << (c - 1));
                bool all = true;
                for (IndexSet sub = s;; sub = (sub - 1) & s) {
                    if (!pattern.contains(sub)) {
                        all = false;
                        break;
                    }
                    if (sub == 0) break;
                }
                if (all) return std::array<int, 3>{a, b, c};
            }
    return std::nullopt;
}

std::optional<std::array<IndexSet, 3>> find_minimal_3cycle_in_pattern(const IntersectionPattern& pattern) {
    if (pattern.k != 4) throw std::invalid_argument("pattern 3-cycles are defined over [4]");
    std::vector<IndexSet> mid;
    for (IndexSet m : pattern.members) {
        const int sz = std::popcount(m);
        if (sz == 2 || sz == 3) mid.push_back(m);
    }
    for (std::size_t i = 0; i < mid.size(); ++i)
        for (std::size_t j = i + 1; j < mid.size(); ++j)
            for (std::size_t l = j + 1; l < mid.size(); ++l) {
                const IndexSet a = mid[i], b = mid[j], c = mid[l];
                if ((a & b) && (b & c) && (a & c) && !(a & b & c))
                    return std::array<IndexSet, 3>{a, b, c};
            }
    return std::nullopt;
}

namespace {

VertexSet restrict_to(const Edge& e, IndexSet idx, const KPartition& p) {
    VertexSet u;
    for (int i = 0; i < p.k(); ++i)
        if (idx >> i & 1) u |= p.parts[i];
    return e & u;
}

bool transversal(const Edge& e, const KPartition& p) {
    int hits = 0;
    for (const auto& part : p.parts) {
        const int c = (e & part).size();
        if (c > 1) return false;
        hits += c;
    }
    return hits == e.size() && hits == p.k();
}

// One-byte part coordinates packed into a word; edges must be transversal.
bool pack_coords(const std::vector<Edge>& edges, const KPartition& part, std::vector<std::uint64_t>& out) {
    const int k = part.k();
    if (k > 8) return false;
    out.assign(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].size() != k) return false;
        std::uint64_t packed = 0;
        for (int p = 0; p < k; ++p) {
            const VertexSet hit = edges[i] & part.parts[p];
            if (hit.size() != 1) return false;
            packed |= static_cast<std::uint64_t>(hit.min_vertex()) << (8 * p);
        }
        out[i] = packed;
    }
    return true;
}

// Intersection pattern of each edge within `edges` under the partition.
std::vector<std::vector<IndexSet>> edge_patterns(const std::vector<Edge>& edges, const KPartition& part) {
    const int k = part.k();
    const std::size_t m = edges.size();
    std::vector<std::vector<IndexSet>> out(m);
    std::vector<std::uint64_t> packed;
    if (k <= 6 && pack_coords(edges, part, packed)) {
        std::vector<std::uint64_t> bits(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t pi = packed[i];
            for (std::size_t j = i + 1; j < m; ++j) {
                const std::uint64_t x = pi ^ packed[j];
                unsigned mask = 0;
                for (int p = 0; p < k; ++p)
                    if (((x >> (8 * p)) & 0xffu) == 0) mask |= 1u << p;
                const std::uint64_t b = std::uint64_t{1} << mask;
                bits[i] |= b;
                bits[j] |= b;
            }
        }
        for (std::size_t i = 0; i < m; ++i)
            for (unsigned mask = 0; mask < (1u << k); ++mask)
                if (bits[i] >> mask & 1) out[i].push_back(mask);
        return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::set<IndexSet> s;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) s.insert(project(edges[i] & edges[j], part));
        out[i].assign(s.begin(), s.end());
    }
    return out;
}

struct PartitionCandidates {
    const Family& family;
    std::vector<int> support;
    std::map<int, VertexSet> conflict;  // co-occurrence neighborhoods

    explicit PartitionCandidates(const Family& f) : family(f) {
        support = f.support().vertices();
        for (const Edge& e : f.edges) {
            e.for_each([&](int v) {
                VertexSet others = e;
                others.erase(v);
                conflict[v] |= others;
            });
        }
    }

    std::int64_t transversal_count(const std::vector<int>& color) const {
        std::int64_t c = 0;
        for (const Edge& e : family.edges) {
            unsigned seen = 0;
            bool ok = true;
            e.for_each([&](int v) {
                const int col = color[v];
                if (col == 0 || (seen >> (col - 1) & 1)) ok = false;
                if (col > 0) seen |= 1u << (col - 1);
            });
            if (ok && static_cast<int>(std::popcount(seen)) == family.k) ++c;
        }
        return c;
    }

    // color[v] in 1..k; 0 = unassigned
    std::vector<int> dsatur() const {
        const int k = family.k;
        std::vector<int> color(VertexSet::max_vertices + 1, 0);
        std::vector<int> order = support;
        std::vector<char> placed(VertexSet::max_vertices + 1, 0);
        for (std::size_t step = 0; step < support.size(); ++step) {
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v : order) {
                if (placed[v]) continue;
                unsigned sat_mask = 0;
                auto it = conflict.find(v);
                if (it != conflict.end())
                    it->second.for_each([&](int u) {
                        if (color[u]) sat_mask |= 1u << (color[u] - 1);
                    });
                const int sat = std::popcount(sat_mask);
                const int deg = it == conflict.end() ? 0 : it->second.size();
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            std::array<int, 17> clash{};
            std::array<int, 17> load{};
            auto it = conflict.find(pick);
            if (it != conflict.end())
                it->second.for_each([&](int u) {
                    if (color[u]) ++clash[color[u]];
                });
            for (int v : support)
                if (color[v]) ++load[color[v]];
            int best = 1;
            for (int c = 2; c <= k; ++c) {
                if (clash[c] < clash[best] || (clash[c] == clash[best] && load[c] < load[best])) best = c;
            }
            color[pick] = best;
            placed[pick] = 1;
        }
        return color;
    }

    std::vector<int> random_greedy(std::mt19937_64& rng) const {
        const int k = family.k;
        std::vector<int> color(VertexSet::max_vertices + 1, 0);
        std::vector<int> order = support;
        std::shuffle(order.begin(), order.end(), rng);
        std::array<int, 17> load{};
        for (int v : order) {
            std::array<int, 17> clash{};
            auto it = conflict.find(v);
            if (it != conflict.end())
                it->second.for_each([&](int u) {
                    if (color[u]) ++clash[color[u]];
                });
            int best = 1;
            for (int c = 2; c <= k; ++c)
                if (clash[c] < clash[best] || (clash[c] == clash[best] && load[c] < load[best])) best = c;
            color[v] = best;
            ++load[best];
        }
        return color;
    }
};

KPartition best_partition(const Family& family, const ExtractOptions& opts) {
    const int k = family.k;
    PartitionCandidates pc(family);
    std::mt19937_64 rng(opts.seed);
    std::vector<int> best_color;
    std::int64_t best_score = -1;
    auto hill_climb = [&](std::vector<int>& color) {
        std::int64_t score = pc.transversal_count(color);
        for (int pass = 0; pass < 20; ++pass) {
            bool improved = false;
            for (int v : pc.support) {
                const int keep = color[v];
                int arg = keep;
                std::int64_t best_local = score;
                for (int c = 1; c <= k; ++c) {
                    if (c == keep) continue;
                    color[v] = c;
                    const std::int64_t trial = pc.transversal_count(color);
                    if (trial > best_local) {
                        best_local = trial;
                        arg = c;
                    }
                }
                color[v] = arg;
                if (arg != keep) {
                    score = best_local;
                    improved = true;
                }
            }
            if (!improved) break;
        }
        return score;
    };
    auto consider = [&](std::vector<int> color) {
        const std::int64_t score = pc.transversal_count(color);
        if (score > best_score) {
            best_score = score;
            best_color = std::move(color);
        }
    };
    const std::int64_t perfect = family.size();
    consider(pc.dsatur());
    for (int r = 0; r < opts.restarts && best_score < perfect; ++r) consider(pc.random_greedy(rng));
    if (best_score < perfect) best_score = hill_climb(best_color);
    std::vector<VertexSet> parts(k);
    for (int v : pc.support)
        if (best_color[v]) parts[best_color[v] - 1].insert(v);
    return make_kpartition(std::move(parts));
}

KPartition restrict_partition(const KPartition& p, const VertexSet& support) {
    std::vector<VertexSet> parts = p.parts;
    for (auto& part : parts) part &= support;
    return KPartition{std::move(parts)};
}

ExtractResult extract_impl(const Family& family, const Family& kernel_parent, int s,
                           const ExtractOptions& opts, KernelOracle& oracle) {
    const int k = family.k;
    ExtractResult out;
    out.piece.threshold_s = s;
    out.piece.pattern.k = k;
    out.piece.partition.parts.assign(k, VertexSet{});
    out.piece.family = make_family(family.n, k, {});
    out.remainder = family;
    if (family.edges.empty()) return out;

    const KPartition partition = best_partition(family, opts);
    std::vector<Edge> group;
    for (const Edge& e : family.edges)
        if (transversal(e, partition)) group.push_back(e);
    if (group.empty()) {
        out.piece.partition = partition;
        return out;
    }

    std::vector<IndexSet> pattern;
    for (int round = 0; round < 1 + static_cast<int>(family.edges.size()) * 2; ++round) {
        const auto pats = edge_patterns(group, partition);
        std::map<std::vector<IndexSet>, std::vector<Edge>> groups;
        for (std::size_t i = 0; i < group.size(); ++i) groups[pats[i]].push_back(group[i]);
        const std::vector<IndexSet>* best_key = nullptr;
        std::size_t best_sz = 0;
        for (const auto& [key, member] : groups)
            if (member.size() > best_sz) {
                best_sz = member.size();
                best_key = &key;
            }
        std::vector<Edge> g1 = groups[*best_key];
        const std::vector<IndexSet>& j = *best_key;
        const auto jc = close_under_intersection(IntersectionPattern{k, j});
        std::vector<Edge> g2;
        for (const Edge& e : g1) {
            bool ok = true;
            for (IndexSet m : jc.members)
                if (!oracle.at_least(restrict_to(e, m, partition))) {
                    ok = false;
                    break;
                }
            if (ok) g2.push_back(e);
        }
        if (g2.empty()) {
            group = {*std::min_element(group.begin(), group.end())};
            continue;
        }
        if (g2 == group && g1.size() == group.size() && jc.members == j) {
            pattern = j;
            break;
        }
        if (g2 == group && g1.size() == group.size()) {
            // uniform but not intersection-closed: shrink deterministically
            group.pop_back();
            continue;
        }
        group = std::move(g2);
    }
    if (pattern.empty() && !group.empty()) {
        // loop ended at a single edge; its pattern is empty and valid
        const auto pats = edge_patterns(group, partition);
        pattern = pats[0];
    }

    VertexSet sup;
    for (const Edge& e : group) sup |= e;
    out.piece.family = make_family(family.n, k, group);
    out.piece.partition = restrict_partition(partition, sup);
    out.piece.pattern = make_pattern(k, pattern);
    std::vector<Edge> rem;
    for (const Edge& e : family.edges)
        if (!out.piece.family.contains_edge(e)) rem.push_back(e);
    out.remainder = make_family(family.n, k, std::move(rem));

    const auto rep = is_homogeneous(out.piece, kernel_parent);
    if (!rep.ok)
        throw std::logic_error("extracted piece fails homogeneity: " + rep.violations.front());
    return out;
}

}  // namespace

HomogeneityReport is_homogeneous(const HomogeneousFamily& candidate, const Family& parent) {
    HomogeneityReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    for (const Edge& e : candidate.family.edges)
        if (!parent.contains_edge(e))
            throw std::invalid_argument("candidate edge " + e.to_string() + " is not in the parent family");
    if (candidate.partition.k() != candidate.family.k || candidate.pattern.k != candidate.family.k) {
        fail("(2) partition or pattern arity differs from the uniformity");
        return rep;
    }
    bool all_transversal = true;
    for (const Edge& e : candidate.family.edges)
        if (!transversal(e, candidate.partition)) {
            fail("(2) edge " + e.to_string() + " is not transversal");
            all_transversal = false;
            break;
        }
    if (all_transversal && candidate.partition.k() == candidate.family.k) {
        const auto pats = edge_patterns(candidate.family.edges, candidate.partition);
        for (std::size_t i = 0; i < pats.size(); ++i)
            if (pats[i] != candidate.pattern.members) {
                fail("(3) edge " + candidate.family.edges[i].to_string() + " has a different pattern");
                break;
            }
    }
    if (!is_intersection_closed(candidate.pattern))
        fail("(4) pattern is not closed under intersection");
    KernelOracle oracle(parent, candidate.threshold_s);
    bool kernel_ok = true;
    for (const Edge& e : candidate.family.edges) {
        for (IndexSet m : candidate.pattern.members) {
            const VertexSet d = restrict_to(e, m, candidate.partition);
            if (!oracle.at_least(d)) {
                fail("(5) restriction " + d.to_string() + " of " + e.to_string() +
                     " is not an s-kernel of the parent");
                kernel_ok = false;
                break;
            }
        }
        if (!kernel_ok) break;
    }
    return rep;
}

ExtractResult extract_homogeneous(const Family& family, int s, const ExtractOptions& opts) {
    if (s < 1) throw std::invalid_argument("kernel threshold must be positive");
    KernelOracle oracle(family, s);
    return extract_impl(family, family, s, opts, oracle);
}

PartitionResult partition_family(const Family& family, int s, const ExtractOptions& opts) {
    if (s < 1) throw std::invalid_argument("kernel threshold must be positive");
    PartitionResult out;
    out.residual = family;
    KernelOracle oracle(family, s);  // kernels are measured in the original family
    Family rest = family;
    while (!rest.edges.empty()) {
        ExtractResult ex = extract_impl(rest, family, s, opts, oracle);
        if (ex.piece.family.edges.empty()) break;
        if (pattern_rank(ex.piece.pattern) < family.k - 1) break;
        out.pieces.push_back(ex.piece);
        rest = ex.remainder;
    }
    out.residual = rest;
    return out;
}

bool central_assignment_valid(KernelOracle& oracle, const Edge& edge, int c) {
    if (!edge.contains(c)) return false;
    const std::vector<int> others = (edge - Edge{c}).vertices();
    bool ok = true;
    // every proper subset through c, i.e. {c} plus a proper subset of the rest
    for (int p = 0; p < static_cast<int>(others.size()) && ok; ++p) {
        detail::for_each_subset_of_size(others, p, [&](const std::vector<int>& sub) {
            if (!ok) return;
            Edge d{c};
            for (int v : sub) d.insert(v);
            if (!oracle.at_least(d)) ok = false;
        });
    }
    return ok;
}

namespace {

ViolationCertificate build_linear_violation(const HomogeneousFamily& piece, const Family& family,
                                            int s, int ell, const std::array<int, 3>& triple) {
    VertexSet u;
    for (int idx : triple) u |= piece.partition.parts[idx - 1];
    std::set<Edge> h3;
    for (const Edge& e : piece.family.edges) h3.insert(e & u);
    VertexSet used;
    auto place = [&](int a, int b) -> int {
        for (const Edge& t : h3) {
            if (!t.contains(a) || !t.contains(b)) continue;
            const int third = (t - Edge{a, b}).min_vertex();
            if (third && !used.contains(third)) {
                used.insert(third);
                return third;
            }
        }
        throw std::runtime_error("triangulated-cycle embedding ran out of fresh triples (threshold too small)");
    };
    std::vector<int> v(ell + 1, 0);
    const Edge first = *h3.begin();
    const std::vector<int> fv = first.vertices();
    v[1] = fv[0];
    v[2] = fv[1];
    v[3] = fv[2];
    used = first;
    for (int i = 3; i <= ell - 1; ++i) v[i + 1] = place(v[1], v[i]);
    std::vector<Edge> b_triples;
    for (int j = 1; j <= ell; ++j) {
        const int a = v[j], b = v[j % ell + 1];
        const int uj = place(a, b);
        b_triples.push_back(Edge{a, b, uj});
    }
    const Template tmpl = make_template(family.n, b_triples);
    const EmbeddingCertificate cert = embed_expansion(tmpl, family, s);
    ViolationCertificate out;
    out.kind = CycleKind::linear;
    for (const auto& [te, he] : cert.mapped_edges) out.witness.edges.push_back(he);
    for (int j = 1; j <= ell; ++j) out.witness.vertices.push_back(v[j]);
    if (!validate_cycle_witness(family, CycleSpec{CycleKind::linear, ell, family.k}, out.witness))
        throw std::logic_error("constructed linear violation failed re-validation");
    return out;
}

ViolationCertificate build_minimal_violation(const HomogeneousFamily& piece, const Family& family,
                                             int ell, const std::array<IndexSet, 3>& tri) {
    const KPartition& part = piece.partition;
    const std::vector<Edge>& pool = piece.family.edges;
    auto fresh_edge = [&](const VertexSet& base, const VertexSet& blocked) -> std::optional<Edge> {
        for (const Edge& f : pool) {
            if (!base.is_subset_of(f)) continue;
            if ((f - base).intersects(blocked)) continue;
            return f;
        }
        return std::nullopt;
    };
    const Edge e0 = pool.front();
    std::vector<Edge> cyc;
    VertexSet blocked = e0;
    for (IndexSet idx : tri) {
        auto h = fresh_edge(restrict_to(e0, idx, part), blocked);
        if (!h) throw std::runtime_error("minimal 3-cycle base construction failed (threshold too small)");
        cyc.push_back(*h);
        blocked |= *h;
    }
    const auto& jmembers = piece.pattern.members;
    while (static_cast<int>(cyc.size()) < ell) {
        const int m = static_cast<int>(cyc.size());
        bool grown = false;
        VertexSet all;
        for (const Edge& e : cyc) all |= e;
        for (int p = 0; p < m && !grown; ++p) {
            const Edge& e = cyc[p];
            const Edge& prev = cyc[(p + m - 1) % m];
            const Edge& next = cyc[(p + 1) % m];
            const IndexSet proj_prev = project(e & prev, part);
            const IndexSet proj_next = project(e & next, part);
            for (IndexSet ja : jmembers) {
                if ((proj_prev & ~ja) || (ja & proj_next)) continue;
                for (IndexSet jb : jmembers) {
                    if ((proj_next & ~jb) || (jb & proj_prev)) continue;
                    if (!(ja & jb)) continue;
                    auto ea = fresh_edge(restrict_to(e, ja, part), all);
                    if (!ea) continue;
                    auto eb = fresh_edge(restrict_to(e, jb, part), all | *ea);
                    if (!eb) continue;
                    std::vector<Edge> next_cyc;
                    for (int q = 0; q < m; ++q) {
                        if (q == p) {
                            next_cyc.push_back(*ea);
                            next_cyc.push_back(*eb);
                        } else {
                            next_cyc.push_back(cyc[q]);
                        }
                    }
                    cyc = std::move(next_cyc);
                    grown = true;
                    break;
                }
                if (grown) break;
            }
        }
        if (!grown) throw std::runtime_error("minimal-cycle growth failed (threshold too small)");
    }
    std::vector<VertexSet> links(ell), sdr(ell);
    for (int i = 0; i < ell; ++i) links[i] = cyc[i] & cyc[(i + 1) % ell];
    sdr[0] = links[ell - 1];
    for (int i = 1; i < ell; ++i) sdr[i] = links[i - 1];
    ViolationCertificate out;
    out.kind = CycleKind::minimal;
    out.witness.edges = cyc;
    out.witness.vertices = detail::distinct_representatives(sdr);
    if (!validate_cycle_witness(family, CycleSpec{CycleKind::minimal, ell, family.k}, out.witness))
        throw std::logic_error("constructed minimal violation failed re-validation");
    return out;
}

}  // namespace

CentralizeResult centralize(const Family& family, int s, const CycleSpec& forbidden,
                            const ExtractOptions& opts) {
    if (forbidden.k != family.k) throw std::invalid_argument("forbidden uniformity differs from the family");
    if (forbidden.ell < 3) throw std::invalid_argument("forbidden cycles need length >= 3");
    if (s < family.k * forbidden.ell)
        throw std::invalid_argument("centralize needs s >= k * l");
    CentralizeResult out;
    PartitionResult parts = partition_family(family, s, opts);
    std::vector<std::pair<Edge, int>> assigned;
    std::vector<Edge> residual_edges = parts.residual.edges;
    for (std::size_t pi = 0; pi < parts.pieces.size(); ++pi) {
        const HomogeneousFamily& piece = parts.pieces[pi];
        const PatternClassification cls = classify_pattern(piece.pattern);
        if (cls.type == PatternClassification::Type::type1) {
            const VertexSet& central_part = piece.partition.parts[cls.central - 1];
            for (const Edge& e : piece.family.edges)
                assigned.emplace_back(e, (e & central_part).min_vertex());
            continue;
        }
        if (cls.type == PatternClassification::Type::low_rank) {
            residual_edges.insert(residual_edges.end(), piece.family.edges.begin(), piece.family.edges.end());
            continue;
        }
        // rank k, or rank k-1 of type 2: the piece hosts a forbidden cycle
        if (auto triple = find_kernel_triple(piece.pattern)) {
            out.violation = build_linear_violation(piece, family, s, forbidden.ell, *triple);
        } else if (family.k == 4) {
            auto tri = find_minimal_3cycle_in_pattern(piece.pattern);
            if (!tri) throw std::logic_error("type-2 pattern over [4] without a minimal 3-cycle");
            out.violation = build_minimal_violation(piece, family, forbidden.ell, *tri);
        } else {
            throw std::logic_error("type-2 pattern without a kernel triple at k >= 5");
        }
        // the decomposition stops at a violation; unprocessed pieces stay residual
        for (std::size_t pj = pi; pj < parts.pieces.size(); ++pj)
            residual_edges.insert(residual_edges.end(), parts.pieces[pj].family.edges.begin(),
                                  parts.pieces[pj].family.edges.end());
        break;
    }
    std::sort(assigned.begin(), assigned.end());
    std::vector<Edge> centralized_edges;
    for (auto& [e, c] : assigned) {
        centralized_edges.push_back(e);
        out.central.push_back(c);
    }
    out.centralized = make_family(family.n, family.k, std::move(centralized_edges));
    out.residual = make_family(family.n, family.k, std::move(residual_edges));
    return out;
}

VertexSet maximal_core_extension(const Family& family, int s, const VertexSet& S) {
    if (S.empty()) throw std::invalid_argument("core extension needs a nonempty core");
    if (family.k < 3) throw std::invalid_argument("2-kernels need k >= 3");
    KernelOracle oracle(family, s);
    VertexSet w;
    for (int v = 1; v <= family.n; ++v) {
        if (S.contains(v)) continue;
        bool ok = true;
        S.for_each([&](int x) {
            if (ok && !oracle.at_least(Edge{x, v})) ok = false;
        });
        if (ok) w.insert(v);
    }
    return w;
}

std::optional<CoreResult> extract_core(const Family& family, int s, int t, bool exhaustive) {
    if (s < 1 || t < 1) throw std::invalid_argument("core extraction needs s >= 1 and t >= 1");
    if (family.k < 3) throw std::invalid_argument("2-kernels need k >= 3");
    const std::vector<int> support = family.support().vertices();
    if (static_cast<int>(support.size()) < t + 1) return std::nullopt;
    KernelOracle oracle(family, s);
    std::map<int, VertexSet> nbrs;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j)
            if (oracle.at_least(Edge{support[i], support[j]})) {
                nbrs[support[i]].insert(support[j]);
                nbrs[support[j]].insert(support[i]);
            }
    std::vector<int> pool = support;
    std::map<int, int> deg;
    for (int v : support) deg[v] = nbrs[v].size();
    std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    if (!exhaustive && static_cast<int>(pool.size()) > 3 * t) pool.resize(3 * t);
    std::optional<CoreResult> best;
    detail::for_each_subset_of_size(pool, t, [&](const std::vector<int>& sub) {
        VertexSet sset;
        VertexSet common = nbrs[sub[0]];
        for (int x : sub) {
            sset.insert(x);
            common &= nbrs[x];
        }
        common -= sset;
        if (common.empty()) return;
        if (!best || common.size() > best->extension.size())
            best = CoreResult{sset, common};
    });
    return best;
}

}  // namespace turan
