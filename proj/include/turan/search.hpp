#pragma once

#include <cstdint>
#include <optional>

#include "turan/structures.hpp"

namespace turan {

enum class ForbiddenKind { linear_cycle, minimal_cycle, linear_path, minimal_path };

struct ForbiddenSpec {
    ForbiddenKind kind = ForbiddenKind::minimal_cycle;
    int ell = 3;
    int k = 3;
};

struct SearchResult {
    std::int64_t value = 0;
    Family certificate;
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
};

// Exact Turán number by include/exclude DFS over the k-sets of [n] in lex
// order: incremental forbidden-configuration detection through the new edge,
// count-based upper-bound cut, and a root-level relabeling cut (the first
// included edge is {1..k}). The certificate is the lexicographically least
// optimal family; budget exhaustion returns the incumbent with
// proven_optimal = false.
SearchResult exact_turan(int n, int k, const ForbiddenSpec& forbidden,
                         std::uint64_t budget = 100000000ULL);

struct BoundReport {
    std::int64_t family_size = 0;
    std::int64_t cycle_bound = 0;                 // (k*l - 1) * C(n, k-1)
    std::optional<std::int64_t> triple_bound;     // (2l - 3) * C(n, 2), 3-uniform only
    std::int64_t slack = 0;                       // tightest bound minus size
};

// Asserts the generic cycle-free size bounds on a family already verified
// linear-C_l-free; a violation indicates an upstream bug and throws.
BoundReport upper_bound_sanity(const Family& family, int ell);

struct Decomposition {
    VertexSet S, W, Z;
    Family g0;          // edges inside Z
    Family g1;          // edges missing S with exactly one vertex in W
    Family a;           // members of g1 whose Z-part has g1-degree < l
    Family b;           // the rest of g1
    Family g2;          // edges missing S with at least two vertices in W
    Family d;           // absent k-sets with one vertex in S, one in Z, rest in W
    std::int64_t meets_s = 0;  // |F ∩ F_S|
};

// The relative decomposition of a family around a core set S at threshold s;
// ell drives the A/B degree split.
Decomposition decompose_relative(const Family& family, int s, const VertexSet& S, int ell = 3);

struct StabilityCover {
    VertexSet S;
    std::int64_t uncovered = 0;
    double uncovered_fraction = 0.0;  // uncovered / C(n, k)
};

// Greedy t-element vertex cover of the edge set.
StabilityCover stability_cover(const Family& family, int t);

}  // namespace turan
