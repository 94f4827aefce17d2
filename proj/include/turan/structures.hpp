#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "turan/family.hpp"

namespace turan {

// Hypergraph with mixed edge sizes, used as expansion input.
struct Template {
    int n = 0;
    std::vector<Edge> edges;

    VertexSet support() const;
};

// Validates: edges nonempty, no duplicates, vertices within 1..n.
Template make_template(int n, std::vector<Edge> edges);

enum class CycleKind { linear, minimal, berge };

struct CycleSpec {
    CycleKind kind = CycleKind::linear;
    int ell = 3;
    int k = 2;
};

// F_1..F_l in cyclic order plus the vertex cycle v_1..v_l, where
// v_{i+1} ∈ F_i ∩ F_{i+1} and v_1 ∈ F_l ∩ F_1.
struct CycleWitness {
    std::vector<Edge> edges;
    std::vector<int> vertices;
};

// F_1..F_l in path order plus the vertex walk v_1..v_{l+1} with
// {v_i, v_{i+1}} ⊆ F_i.
struct PathWitness {
    std::vector<Edge> edges;
    std::vector<int> vertices;
};

// l edges on l(k-1)+1 consecutive vertices starting at start_vertex;
// consecutive edges share exactly one vertex.
Family gen_linear_path(int k, int ell, int start_vertex);

// l edges on l(k-1) vertices; cyclically consecutive edges share exactly one
// vertex, all other pairs disjoint.
Family gen_linear_cycle(int k, int ell);

// 3-uniform host on 2l vertices with 2l-2 edges {v1,vi,vi+1} / {vj,vj+1,uj};
// its B-edges form the 3-uniform linear l-cycle.
Family gen_triangulated_cycle(int ell);

// Pads every template edge to a k-set with fresh vertices numbered
// consecutively from first_new_vertex, different edges getting disjoint pads.
Family expand(const Template& tmpl, int k, int first_new_vertex);

// Exhaustive backtracking detectors; absence is a proof at the tested size.
std::optional<CycleWitness> contains_cycle(const Family& family, const CycleSpec& spec);
std::optional<PathWitness> contains_linear_path(const Family& family, int ell);
std::optional<PathWitness> contains_minimal_path(const Family& family, int ell);

// Re-validation by direct set arithmetic, independent of the search path.
bool validate_cycle_witness(const Family& family, const CycleSpec& spec, const CycleWitness& w);
bool validate_path_witness(const Family& family, bool linear, int ell, const PathWitness& w);

struct EmbeddingCertificate {
    std::vector<std::pair<Edge, Edge>> mapped_edges;  // (template edge, host edge)
    VertexSet expansion_vertices;
};

// Greedy expansion embedding: template edges are mapped one by one to host
// edges whose petals avoid everything placed so far; requires
// s >= k * |template.edges| and every template edge to be an s-kernel of the
// host (a full k-set must itself be a host edge).
EmbeddingCertificate embed_expansion(const Template& tmpl, const Family& host, int s);

bool validate_embedding(const Template& tmpl, const Family& host, const EmbeddingCertificate& cert);

namespace detail {

// Core searches over an explicit edge list. through >= 0 restricts to
// configurations using edges[through]; nodes (optional) counts extensions.
std::optional<CycleWitness> find_cycle(const std::vector<Edge>& edges, CycleKind kind, int ell,
                                       int through, std::uint64_t* nodes);
std::optional<PathWitness> find_path(const std::vector<Edge>& edges, bool linear, int ell,
                                     int through, std::uint64_t* nodes);

// Distinct representatives for the witness vertex list; empty when none exist.
std::vector<int> distinct_representatives(const std::vector<VertexSet>& sets);

}  // namespace detail

}  // namespace turan
