#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/structures.hpp"

namespace turan {

// Subset of the part indices [k], bit i standing for part i+1.
using IndexSet = std::uint32_t;

// Vertex partition X_1..X_k; parts are pairwise disjoint and cover the
// support of whatever family they accompany.
struct KPartition {
    std::vector<VertexSet> parts;

    int k() const { return static_cast<int>(parts.size()); }
    int part_of(int v) const;  // 1-based part index, 0 when unassigned
};

KPartition make_kpartition(std::vector<VertexSet> parts);

// Family of proper subsets of [k], kept sorted and deduplicated.
struct IntersectionPattern {
    int k = 0;
    std::vector<IndexSet> members;

    bool contains(IndexSet m) const;
};

IntersectionPattern make_pattern(int k, std::vector<IndexSet> members);

// {F ∩ F' : F' in the family, F' != F}; f must be an edge of the family.
std::vector<Edge> intersection_structure(const Edge& f, const Family& family);

// Index set of the parts met by s.
IndexSet project(const VertexSet& s, const KPartition& partition);

// Minimum size of a nonempty subset of [k] contained in no member (∅ counts
// as contained in every set, so the rank is always >= 1).
int pattern_rank(const IntersectionPattern& pattern);

IntersectionPattern close_under_intersection(const IntersectionPattern& pattern);
bool is_intersection_closed(const IntersectionPattern& pattern);

struct PatternClassification {
    enum class Type { type1, type2, rank_k, low_rank };
    Type type = Type::low_rank;
    int rank = 0;
    bool normalized = false;     // input was closed under intersection first
    int central = 0;             // type1: the central part index
    std::vector<int> head;       // type2: x_1..x_t
    std::vector<int> tail;       // type2: x_{t+1}..x_k
};

// Classifies an intersection-closed pattern (the closure is taken first and
// reported when the input is not closed).
PatternClassification classify_pattern(const IntersectionPattern& pattern);

// A 3-set S of part indices with 2^S contained in the pattern.
std::optional<std::array<int, 3>> find_kernel_triple(const IntersectionPattern& pattern);

// Three pattern members of sizes 2..3 that pairwise intersect with empty
// common intersection (a minimal 3-cycle of index sets); k = 4 only.
std::optional<std::array<IndexSet, 3>> find_minimal_3cycle_in_pattern(const IntersectionPattern& pattern);

struct HomogeneousFamily {
    Family family;
    KPartition partition;
    IntersectionPattern pattern;
    int threshold_s = 1;
};

struct HomogeneityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the homogeneity conditions: (2) k-partiteness, (3) every edge has
// the stored pattern, (4) the pattern is intersection-closed, (5) every
// restriction F[I] is an s-kernel of the parent family.
HomogeneityReport is_homogeneous(const HomogeneousFamily& candidate, const Family& parent);

struct ExtractOptions {
    std::uint64_t seed = 0x5EED;
    int restarts = 32;
};

struct ExtractResult {
    HomogeneousFamily piece;
    Family remainder;
};

// Heuristic extraction: pick the partition maximizing transversal edges over
// greedy candidates, then shrink the largest equal-pattern group until the
// homogeneity conditions hold against the parent family.
ExtractResult extract_homogeneous(const Family& family, int s, const ExtractOptions& opts = {});

struct PartitionResult {
    std::vector<HomogeneousFamily> pieces;  // each of pattern rank >= k-1
    Family residual;
};

// Repeated extraction; stops once the extracted piece has rank <= k-2 (that
// piece stays in the residual) or the family is exhausted.
PartitionResult partition_family(const Family& family, int s, const ExtractOptions& opts = {});

struct ViolationCertificate {
    CycleKind kind = CycleKind::linear;
    CycleWitness witness;
};

struct CentralizeResult {
    Family centralized;
    std::vector<int> central;  // central vertex per centralized edge
    Family residual;
    std::optional<ViolationCertificate> violation;
};

// Partitions the family and classifies each homogeneous piece: type-1 pieces
// join the centralized part with c(F) = the vertex in the central part;
// kernel-triple pieces (rank k, or type 2 with k >= 5) produce a constructive
// linear l-cycle violation, type-2 pieces at k = 4 a minimal one.
CentralizeResult centralize(const Family& family, int s, const CycleSpec& forbidden,
                            const ExtractOptions& opts = {});

// True when every proper subset D with c ∈ D ⊆ edge is an s-kernel of the
// oracle's family.
bool central_assignment_valid(KernelOracle& oracle, const Edge& edge, int c);

struct CoreResult {
    VertexSet core;       // the t-set S
    VertexSet extension;  // T, disjoint from S
};

// Scans t-subsets of the top 3t vertices of the 2-kernel graph (all support
// t-subsets when exhaustive) for the largest common 2-kernel neighborhood.
std::optional<CoreResult> extract_core(const Family& family, int s, int t, bool exhaustive = false);

// { w outside S : {x, w} is an s-kernel for every x in S }. Membership is
// pointwise, so this set is the maximum one.
VertexSet maximal_core_extension(const Family& family, int s, const VertexSet& S);

}  // namespace turan
