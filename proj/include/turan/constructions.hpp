#pragma once

#include <cstdint>
#include <stdexcept>

#include "turan/structures.hpp"

namespace turan {

enum class ExtremalKind { odd_linear, even_linear, odd_minimal, even_minimal };

struct ExtremalSpec {
    ExtremalKind kind = ExtremalKind::odd_linear;
    int n = 0;
    int k = 0;
    int t = 0;
};

// 2t+1 for the odd kinds, 2t+2 for the even ones.
int extremal_ell(const ExtremalSpec& spec);
bool extremal_is_linear(ExtremalKind kind);

// All k-sets of [n] meeting S; |S| must equal t.
Family construct_star_family(int n, int k, int t, const VertexSet& S);

// Canonical extremal families with S = {1..t}: the odd kinds are the star
// family; even-linear adds the k-sets of [n]\S through {t+1, t+2};
// even-minimal adds the single k-set {t+1,...,t+k}.
Family construct_extremal(const ExtremalSpec& spec);

enum class TuranFormulaKind { linear_cycle, minimal_cycle, minimal_path };

struct ExFormulaResult {
    std::int64_t value = 0;
    // The cycle formulas are proven for sufficiently large n only. The two
    // values with explicit validity thresholds (minimal C_3: 2n >= 3k,
    // minimal P_3: n >= 2k) report false once the threshold is met.
    bool asymptotic_only = true;
};

struct UnsupportedParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ExFormulaResult ex_formula(TuranFormulaKind kind, int n, int k, int ell);

struct FreenessReport {
    ExtremalSpec spec;
    int ell = 0;
    std::int64_t family_size = 0;
    bool free = false;
    std::uint64_t nodes = 0;
    double runtime_ms = 0.0;
};

// Runs the matching cycle detector on the constructed family; a detected
// forbidden configuration is a construction bug and throws.
FreenessReport verify_extremal_freeness(const ExtremalSpec& spec);

}  // namespace turan
