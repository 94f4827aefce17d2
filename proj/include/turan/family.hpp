#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "turan/bitset.hpp"

namespace turan {

// k-uniform set family on ground set {1..n}. Edges are kept lex-sorted and
// deduplicated; treat as immutable after construction.
struct Family {
    int n = 0;
    int k = 0;
    std::vector<Edge> edges;

    bool contains_edge(const Edge& e) const;
    VertexSet support() const;
    std::int64_t size() const { return static_cast<std::int64_t>(edges.size()); }

    bool operator==(const Family&) const = default;
};

// Validates uniformity, vertex range and ground-set size; sorts and dedups.
Family make_family(int n, int k, std::vector<Edge> edges);
Family family_from_lists(int n, int k, const std::vector<std::vector<int>>& lists);

// All p-element proper subsets of edges; {∅} for p = 0 on a nonempty family.
std::vector<Edge> shadow_p(const Family& family, int p);

// Number of edges containing d (d of any size; foreign vertices give 0).
std::int64_t degree(const Family& family, const Edge& d);

// Largest s such that the family contains an s-star (Δ-system) with kernel d:
// edges F_1..F_s with F_i ∩ F_j = d for i<j and nonempty petals. Exact
// branch-and-bound maximum petal packing with a greedy warm start.
int kernel_degree(const Family& family, const Edge& d);

// Threshold variant; short-circuits as soon as s disjoint petals are found.
bool kernel_degree_at_least(const Family& family, const Edge& d, int s);

struct KernelGraph {
    int threshold_s = 1;
    std::vector<Edge> members;  // lex-sorted
};

// All subsets of edges with kernel degree >= s, of every size 0..k-1, or of
// size exactly r when given.
KernelGraph kernel_graph(const Family& family, int s, std::optional<int> r = std::nullopt);

struct KruskalKatonaResult {
    double x = 0.0;         // real solution of C(x, k) = |F|
    double bound = 0.0;     // C(x, p)
    double shadow_size = 0.0;
    bool holds = false;     // shadow_size >= bound - 1e-6
};

// Lovász-form shadow bound check for 1 <= p <= k (p = k compares |F| itself).
KruskalKatonaResult kruskal_katona_check(const Family& family, int p);

// Maximum number of pairwise disjoint edges (= kernel degree of ∅).
int matching_number(const Family& family);

// Memoizing threshold oracle for repeated kernel queries against one family.
class KernelOracle {
public:
    KernelOracle(const Family& family, int s) : family_(&family), s_(s) {}

    bool at_least(const Edge& d);
    int threshold() const { return s_; }

private:
    const Family* family_;
    int s_;
    std::map<Edge, bool> memo_;
};

struct PeelResult {
    Family remaining;
    std::int64_t removed = 0;
};

// On a 3-uniform family: repeatedly remove all triples through the lex-least
// pair of degree in [1, low], until no such pair remains.
PeelResult peel_low_codegree(const Family& family, int low);

namespace detail {

// Exact maximum number of pairwise disjoint sets.
int max_set_packing(const std::vector<VertexSet>& sets);

// Decision variant with early exit once `target` disjoint sets are found.
bool packing_at_least(const std::vector<VertexSet>& sets, int target);

// Ascending p-subsets of `items`, invoking f on each combination.
void for_each_subset_of_size(const std::vector<int>& items, int p,
                             const std::function<void(const std::vector<int>&)>& f);

}  // namespace detail

}  // namespace turan
