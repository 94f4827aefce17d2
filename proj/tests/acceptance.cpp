// Acceptance suite: one pass/fail line per criterion, exit code = #failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "planted.hpp"
#include "turan/binom.hpp"
#include "turan/constructions.hpp"
#include "turan/delta.hpp"
#include "turan/search.hpp"

using namespace turan;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void note(const std::string& text) {
    std::printf("       %s\n", text.c_str());
    std::fflush(stdout);
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct FreeFamily {
    Family family;
    int ell;  // verified linear-C_ell-free
};

std::vector<FreeFamily> free_families;

// ---- criterion 1: exact oracle vs the explicit-threshold values ------------

void criterion1() {
    bool pass = true;
    std::string detail;
    struct Case {
        int n;
        ForbiddenKind kind;
        std::int64_t expect;
    };
    const Case cases[] = {{5, ForbiddenKind::minimal_cycle, 6},
                          {6, ForbiddenKind::minimal_cycle, 10},
                          {6, ForbiddenKind::minimal_path, 10}};
    for (const Case& c : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const SearchResult r = exact_turan(c.n, 3, ForbiddenSpec{c.kind, 3, 3});
        const double secs = seconds_since(t0);
        const bool ok = r.proven_optimal && r.value == c.expect && secs < 60.0;
        if (!ok) pass = false;
        detail += (detail.empty() ? "" : ", ") + std::string(c.kind == ForbiddenKind::minimal_cycle
                                                                 ? "C3"
                                                                 : "P3") +
                  "@n=" + std::to_string(c.n) + ": " + std::to_string(r.value) + " (expect " +
                  std::to_string(c.expect) + ", " + std::to_string(secs).substr(0, 5) + "s)";
        if (c.kind == ForbiddenKind::minimal_cycle &&
            !contains_cycle(r.certificate, CycleSpec{CycleKind::linear, 3, 3}))
            free_families.push_back({r.certificate, 3});
    }
    report(1, "exact search reproduces the known minimal C3/P3 values", pass, detail);
}

// ---- criterion 2: construction size identities ------------------------------

void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string witness;
    long checked = 0;
    for (int k = 3; k <= 5; ++k) {
        for (int t = 1; t <= 2; ++t) {
            for (int n = k + t + 2; n <= 30; ++n) {
                for (ExtremalKind kind : {ExtremalKind::odd_linear, ExtremalKind::even_linear,
                                          ExtremalKind::odd_minimal, ExtremalKind::even_minimal}) {
                    const ExtremalSpec spec{kind, n, k, t};
                    const std::int64_t size = construct_extremal(spec).size();
                    std::int64_t expect = binom(n, k) - binom(n - t, k);
                    if (kind == ExtremalKind::even_linear) expect += binom(n - t - 2, k - 2);
                    if (kind == ExtremalKind::even_minimal) expect += 1;
                    ++checked;
                    bool local = size == expect;
                    try {
                        const auto f = ex_formula(extremal_is_linear(kind)
                                                      ? TuranFormulaKind::linear_cycle
                                                      : TuranFormulaKind::minimal_cycle,
                                                  n, k, extremal_ell(spec));
                        local = local && f.value == expect;
                    } catch (const UnsupportedParameters&) {
                    }
                    if (!local && pass) {
                        pass = false;
                        witness = "first mismatch at k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                  " n=" + std::to_string(n);
                    }
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 10.0) pass = false;
    report(2, "construction sizes equal the closed forms on the full grid", pass,
           std::to_string(checked) + " grid points in " + std::to_string(secs).substr(0, 5) + "s" +
               (witness.empty() ? "" : "; " + witness));
}

// ---- criterion 3: detector-verified freeness --------------------------------

void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string witness;
    long checked = 0;
    for (int k = 3; k <= 5; ++k) {
        for (int t = 1; t <= 2; ++t) {
            for (int n = k + t + 2; n <= 12; ++n) {
                for (ExtremalKind kind : {ExtremalKind::odd_linear, ExtremalKind::even_linear,
                                          ExtremalKind::odd_minimal, ExtremalKind::even_minimal}) {
                    const ExtremalSpec spec{kind, n, k, t};
                    ++checked;
                    try {
                        const FreenessReport rep = verify_extremal_freeness(spec);
                        free_families.push_back({construct_extremal(spec), rep.ell});
                    } catch (const std::exception& e) {
                        pass = false;
                        if (witness.empty())
                            witness = std::string(e.what()) + " at k=" + std::to_string(k) +
                                      " t=" + std::to_string(t) + " n=" + std::to_string(n);
                    }
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    if (secs >= 300.0) pass = false;
    report(3, "every constructed extremal family is detector-verified free", pass,
           std::to_string(checked) + " families in " + std::to_string(secs).substr(0, 5) + "s" +
               (witness.empty() ? "" : "; " + witness));
}

// ---- criterion 4: kernel-degree oracle equivalence --------------------------

void criterion4() {
    std::mt19937_64 rng(0x5EED);
    bool pass = true;
    std::string witness;
    for (int rep = 0; rep < 500 && pass; ++rep) {
        const int k = 3 + rep % 3;
        Family f = oracle::random_family(rng, k + 5 + rep % 3, k, 12);
        while (f.edges.empty()) f = oracle::random_family(rng, k + 5 + rep % 3, k, 12);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(f.edges.size()) - 1);
        std::uniform_int_distribution<int> sz(0, k - 1);
        for (int q = 0; q < 50; ++q) {
            const Edge d = oracle::random_subset(rng, f.edges[pick(rng)], sz(rng));
            const int expect = oracle::kernel_degree(f, d);
            if (kernel_degree(f, d) != expect) {
                pass = false;
                witness = "mismatch on kernel " + d.to_string();
                break;
            }
        }
    }
    report(4, "kernel degree equals the exhaustive packing oracle (500 x 50)", pass, witness);
}

// ---- criterion 5: shadow bound property suite -------------------------------

void criterion5() {
    std::mt19937_64 rng(0xC0FFEE);
    bool pass = true;
    std::string witness;
    long checked = 0;
    for (int rep = 0; rep < 1000 && pass; ++rep) {
        const int k = 3 + rep % 3;
        Family f = oracle::random_family(rng, k + 4 + rep % 4, k, 30);
        while (f.edges.empty()) f = oracle::random_family(rng, k + 4 + rep % 4, k, 30);
        for (int p = 1; p < k; ++p) {
            ++checked;
            const auto r = kruskal_katona_check(f, p);
            if (!r.holds || r.shadow_size - r.bound < -1e-6) {
                pass = false;
                witness = "violation at k=" + std::to_string(k) + " p=" + std::to_string(p);
                break;
            }
        }
    }
    report(5, "shadow bound holds on 1000 random families", pass,
           std::to_string(checked) + " (family, p) checks");
}

// ---- criterion 6: homogeneous partition postconditions ----------------------

bool partition_postconditions(const Family& f, int s, std::string& witness) {
    const auto res = partition_family(f, s);
    std::vector<Edge> collected = res.residual.edges;
    for (const auto& piece : res.pieces) {
        const auto rep = is_homogeneous(piece, f);
        if (!rep.ok) {
            witness = "piece fails homogeneity: " + rep.violations.front();
            return false;
        }
        const int rank = pattern_rank(piece.pattern);
        if (rank < f.k - 1) {
            witness = "emitted piece of rank " + std::to_string(rank);
            return false;
        }
        if (piece.family.size() > binom(f.n, rank)) {
            witness = "rank bound violated";
            return false;
        }
        collected.insert(collected.end(), piece.family.edges.begin(), piece.family.edges.end());
    }
    std::sort(collected.begin(), collected.end());
    if (collected != f.edges) {
        witness = "pieces and residual do not repartition the input";
        return false;
    }
    return true;
}

void criterion6() {
    std::mt19937_64 rng(0xDE17A);
    bool pass = true;
    std::string witness;
    for (int rep = 0; rep < 100 && pass; ++rep) {
        const int k = 3 + rep % 2;
        Family f = oracle::random_family(rng, 8 + k, k, 24);
        pass = partition_postconditions(f, 1 + rep % 3, witness);
    }
    std::vector<std::pair<Family, int>> planted_instances;
    for (int m = 3; m <= 7; ++m) planted_instances.emplace_back(planted::type1_star_product(3, m), std::min(m, 4));
    for (int m = 3; m <= 5; ++m) planted_instances.emplace_back(planted::type1_star_product(4, m), 3);
    for (int m = 2; m <= 4; ++m) planted_instances.emplace_back(planted::complete_kpartite(3, m), 2);
    for (int m = 2; m <= 3; ++m) planted_instances.emplace_back(planted::complete_kpartite(4, m), 2);
    for (int m = 3; m <= 5; ++m) planted_instances.emplace_back(planted::type2_sum_k4(m), 2);
    for (int m = 4; m <= 7; ++m) {
        std::vector<Edge> es = planted::type1_star_product(3, m).edges;
        Family noise = oracle::random_family(rng, 1 + 2 * m, 3, 6);
        es.insert(es.end(), noise.edges.begin(), noise.edges.end());
        planted_instances.emplace_back(make_family(1 + 2 * m, 3, es), 2);
    }
    int planted_count = 0;
    for (const auto& [f, s] : planted_instances) {
        ++planted_count;
        if (pass) pass = partition_postconditions(f, s, witness);
    }
    report(6, "partition pieces are homogeneous, rank-bounded and conserve edges", pass,
           "100 random + " + std::to_string(planted_count) + " planted instances" +
               (witness.empty() ? "" : "; " + witness));
}

// ---- criterion 7: centralize round trip --------------------------------------

void criterion7() {
    bool pass = true;
    std::string detail;
    // (a) planted type-2 instance with ample kernels refutes with a linear cycle
    try {
        const auto t0 = std::chrono::steady_clock::now();
        Family plant = planted::type2_diagonal_k5(15);
        const auto res = centralize(plant, 15, CycleSpec{CycleKind::linear, 3, 5});
        bool ok = res.violation.has_value() && res.violation->kind == CycleKind::linear;
        if (ok) {
            ok = validate_cycle_witness(plant, CycleSpec{CycleKind::linear, 3, 5},
                                        res.violation->witness);
            Family sub = make_family(plant.n, 5, res.violation->witness.edges);
            ok = ok && contains_cycle(sub, CycleSpec{CycleKind::linear, 3, 5}).has_value();
        }
        if (!ok) pass = false;
        detail += std::string("type-2 plant: ") + (ok ? "linear violation re-validated" : "FAILED") +
                  " (" + std::to_string(seconds_since(t0)).substr(0, 5) + "s)";
    } catch (const std::exception& e) {
        pass = false;
        detail += std::string("type-2 plant threw: ") + e.what();
    }
    // (b) extremal constructions centralize without violation
    try {
        for (const ExtremalSpec spec : {ExtremalSpec{ExtremalKind::odd_linear, 12, 5, 1},
                                        ExtremalSpec{ExtremalKind::odd_minimal, 12, 4, 1}}) {
            Family fam = construct_extremal(spec);
            const CycleSpec forbidden{fam.k >= 5 ? CycleKind::linear : CycleKind::minimal, 3, fam.k};
            const auto res = centralize(fam, fam.k * 3, forbidden);
            if (res.violation) {
                pass = false;
                detail += "; extremal family produced a violation";
                break;
            }
            KernelOracle oracle(fam, fam.k * 3);
            for (std::size_t i = 0; i < res.centralized.edges.size(); ++i)
                if (!central_assignment_valid(oracle, res.centralized.edges[i], res.central[i])) {
                    pass = false;
                    detail += "; invalid central assignment";
                    break;
                }
        }
        detail += "; extremal runs clean";
    } catch (const std::exception& e) {
        pass = false;
        detail += std::string("; extremal threw: ") + e.what();
    }
    // (c) a planted type-1 family centralizes nonvacuously
    try {
        Family plant = planted::type1_star_product(4, 12);
        const auto res = centralize(plant, 12, CycleSpec{CycleKind::minimal, 3, 4});
        bool ok = !res.violation && res.centralized.size() == plant.size();
        KernelOracle oracle(plant, 12);
        for (std::size_t i = 0; i < res.centralized.edges.size() && ok; ++i)
            ok = central_assignment_valid(oracle, res.centralized.edges[i], res.central[i]);
        if (!ok) pass = false;
        detail += std::string("; type-1 plant: ") +
                  (ok ? std::to_string(res.centralized.size()) + " edges assigned and validated"
                      : "FAILED");
    } catch (const std::exception& e) {
        pass = false;
        detail += std::string("; type-1 plant threw: ") + e.what();
    }
    report(7, "centralize refutes planted type-2 and validates centralized parts", pass, detail);
}

// ---- criterion 8: core recovery at the stated threshold ----------------------

void criterion8() {
    bool pass = true;
    std::string detail;
    for (int t = 1; t <= 2; ++t) {
        Family star = construct_star_family(12, 4, t, VertexSet::range(1, t));
        const auto res = extract_core(star, 8, t);
        bool ok = res.has_value() && res->core == VertexSet::range(1, t) &&
                  res->extension.size() == 12 - t;
        if (ok) {
            KernelOracle oracle(star, 8);
            res->core.for_each([&](int x) {
                res->extension.for_each([&](int w) {
                    if (!oracle.at_least(Edge{x, w})) ok = false;
                });
            });
        }
        if (!ok) pass = false;
        detail += (t == 1 ? "" : ", ") + std::string("t=") + std::to_string(t) + ": " +
                  (res ? "recovered S of size " + std::to_string(res->core.size()) : "absent");
    }
    report(8, "core recovery on star families at s = 8", pass, detail);
    if (!pass) {
        note("s = 8 exceeds every pair kernel degree at n = 12, k = 4: petals of a pair are");
        note("2-sets inside the 10 remaining vertices, so at most 5 can be disjoint and");
        note("Ker^(2)_8 is empty. The setup is unattainable as stated; see the diagnostic below.");
        bool diag = true;
        for (int t = 1; t <= 2; ++t) {
            Family star = construct_star_family(12, 4, t, VertexSet::range(1, t));
            const auto res = extract_core(star, 5, t);
            diag = diag && res.has_value() && res->core == VertexSet::range(1, t) &&
                   res->extension.size() == 12 - t;
            if (res) {
                KernelOracle oracle(star, 5);
                res->core.for_each([&](int x) {
                    res->extension.for_each([&](int w) {
                        if (!oracle.at_least(Edge{x, w})) diag = false;
                    });
                });
            }
        }
        note(std::string("diagnostic (not the criterion): at the attainable threshold s = 5 the ") +
             (diag ? "recovery succeeds exactly as specified (S = [t], |T| = 12 - t, all cross "
                     "pairs are 2-kernels)"
                   : "recovery still fails"));
    }
}

// ---- criterion 9: decomposition accounting -----------------------------------

void criterion9() {
    std::mt19937_64 rng(0xDEC0);
    bool pass = true;
    std::string witness;
    for (int rep = 0; rep < 200 && pass; ++rep) {
        const int k = 3 + rep % 2;
        const int n = 9;
        Family f = oracle::random_family(rng, n, k, 25);
        VertexSet s;
        const int t = 1 + rep % 2;
        while (s.size() < t) s.insert(1 + static_cast<int>(rng() % n));
        const auto dec = decompose_relative(f, 2 + rep % 3, s, 3);
        if (dec.meets_s + dec.g0.size() + dec.g1.size() + dec.g2.size() != f.size()) {
            pass = false;
            witness = "accounting identity failed";
        }
    }
    Family fam = construct_extremal(ExtremalSpec{ExtremalKind::even_minimal, 12, 4, 1});
    const auto dec = decompose_relative(fam, 5, Edge{1}, 4);
    if (dec.g2.size() != 1) {
        pass = false;
        witness = "even-minimal G2 = " + std::to_string(dec.g2.size());
    }
    report(9, "decomposition accounting holds; even-minimal reports |G2| = 1", pass,
           "200 random pairs + extremal instance" + (witness.empty() ? "" : "; " + witness));
}

// ---- criterion 10: generic upper-bound sanity ---------------------------------

void criterion10() {
    bool pass = true;
    std::string witness;
    long checked = 0;
    for (const FreeFamily& ff : free_families) {
        try {
            upper_bound_sanity(ff.family, ff.ell);
            ++checked;
        } catch (const std::exception& e) {
            pass = false;
            witness = e.what();
            break;
        }
    }
    report(10, "cycle-free size bounds hold for every free family in the suite", pass,
           std::to_string(checked) + " families checked" + (witness.empty() ? "" : "; " + witness));
}

}  // namespace

int main() {
    using Step = std::function<void()>;
    const std::vector<std::pair<int, Step>> steps = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
    for (const auto& [id, step] : steps) {
        try {
            step();
        } catch (const std::exception& e) {
            report(id, "criterion crashed", false, e.what());
        }
    }
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
