#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "turan/binom.hpp"
#include "turan/hg_io.hpp"
#include "turan/serialize.hpp"

using namespace turan;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0x5EED;
    int threads = 1;
};

Family load(const std::string& path) {
    return read_hg_file(path);
}

void emit_family(const Family& fam, const std::string& out_path) {
    if (out_path.empty())
        write_hg(std::cout, fam);
    else
        write_hg_file(out_path, fam);
}

int run_construct(const std::string& kind, int n, int k, int t, int ell,
                  const std::string& out_path, bool emit_json) {
    Family fam;
    json record{{"kind", kind}};
    std::optional<ExFormulaResult> formula;
    if (kind == "star") {
        fam = construct_star_family(n, k, t, VertexSet::range(1, t));
        formula = ExFormulaResult{binom(n, k) - binom(n - t, k), false};
        record["t"] = t;
    } else if (kind == "linear-cycle") {
        fam = gen_linear_cycle(k, ell);
        record["ell"] = ell;
    } else if (kind == "linear-path") {
        fam = gen_linear_path(k, ell, 1);
        record["ell"] = ell;
    } else if (kind == "triangulated") {
        fam = gen_triangulated_cycle(ell);
        record["ell"] = ell;
    } else {
        ExtremalSpec spec;
        if (kind == "odd-linear") spec.kind = ExtremalKind::odd_linear;
        else if (kind == "even-linear") spec.kind = ExtremalKind::even_linear;
        else if (kind == "odd-minimal") spec.kind = ExtremalKind::odd_minimal;
        else if (kind == "even-minimal") spec.kind = ExtremalKind::even_minimal;
        else throw CLI::ValidationError("--kind", "unknown construction kind " + kind);
        spec.n = n;
        spec.k = k;
        spec.t = t;
        fam = construct_extremal(spec);
        record["t"] = t;
        record["ell"] = extremal_ell(spec);
        try {
            formula = ex_formula(extremal_is_linear(spec.kind) ? TuranFormulaKind::linear_cycle
                                                               : TuranFormulaKind::minimal_cycle,
                                 n, k, extremal_ell(spec));
        } catch (const UnsupportedParameters&) {
        }
    }
    emit_family(fam, out_path);
    if (emit_json) {
        record["n"] = fam.n;
        record["k"] = fam.k;
        record["size"] = fam.size();
        if (formula) {
            record["formula"] = formula->value;
            record["asymptotic_only"] = formula->asymptotic_only;
        } else {
            record["formula"] = nullptr;
        }
        std::cout << record.dump() << '\n';
    }
    return 0;
}

VertexSet parse_vertex_list(const std::string& csv) {
    VertexSet s;
    std::string token;
    std::istringstream ss(csv);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        s.insert(std::stoi(token));
    }
    return s;
}

ForbiddenSpec parse_forbid(const std::string& arg, int k) {
    const auto colon = arg.rfind(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--forbid", "expected KIND:L, e.g. minimal-cycle:3");
    const std::string kind = arg.substr(0, colon);
    const int ell = std::stoi(arg.substr(colon + 1));
    ForbiddenSpec spec;
    spec.ell = ell;
    spec.k = k;
    if (kind == "linear-cycle") spec.kind = ForbiddenKind::linear_cycle;
    else if (kind == "minimal-cycle") spec.kind = ForbiddenKind::minimal_cycle;
    else if (kind == "linear-path") spec.kind = ForbiddenKind::linear_path;
    else if (kind == "minimal-path") spec.kind = ForbiddenKind::minimal_path;
    else throw CLI::ValidationError("--forbid", "unknown forbidden kind " + kind);
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-uniform hypergraph workbench: constructions, cycle detection, "
                 "delta-system extraction and exact Turan search"};
    app.require_subcommand(1);
    GlobalOpts global;
    app.add_option("--seed", global.seed, "seed for randomized partition restarts")->capture_default_str();
    app.add_option("--threads", global.threads, "worker threads (reserved; kernels are single-threaded)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // construct
    std::string c_kind, c_out;
    int c_n = 0, c_k = 0, c_t = 0, c_ell = 0;
    bool c_json = false;
    auto* construct = app.add_subcommand("construct", "build a family and write it as .hg");
    construct->add_option("--kind", c_kind,
                          "odd-linear|even-linear|odd-minimal|even-minimal|star|linear-cycle|linear-path|triangulated")
        ->required();
    construct->add_option("--n", c_n, "ground-set size");
    construct->add_option("--k", c_k, "uniformity");
    construct->add_option("--t", c_t, "core size t");
    construct->add_option("--ell", c_ell, "cycle/path length");
    construct->add_option("-o,--output", c_out, "output .hg file (stdout when omitted)");
    construct->add_flag("--emit-json", c_json, "also print a JSON record");

    // detect
    std::string d_cycle, d_file;
    int d_ell = 3;
    auto* detect = app.add_subcommand("detect", "search a family for a cycle (exit 1 when found)");
    detect->add_option("--cycle", d_cycle, "linear|minimal|berge")->required();
    detect->add_option("--ell", d_ell, "cycle length")->required();
    detect->add_option("file", d_file, "input .hg file")->required();

    // shadow
    int s_p = 1;
    std::string s_file;
    auto* shadow = app.add_subcommand("shadow", "print the p-shadow of a family");
    shadow->add_option("--p", s_p, "shadow order")->required();
    shadow->add_option("file", s_file)->required();

    // kernel
    int kg_s = 1;
    int kg_r = -1;
    std::string kg_file;
    auto* kernel = app.add_subcommand("kernel", "print the kernel graph at threshold s");
    kernel->add_option("--s", kg_s, "kernel threshold")->required();
    kernel->add_option("--r", kg_r, "restrict members to size r");
    kernel->add_option("file", kg_file)->required();

    // turan
    int t_n = 0, t_k = 0;
    std::string t_forbid;
    std::uint64_t t_budget = 100000000ULL;
    auto* turan_cmd = app.add_subcommand("turan", "exact Turan number by branch and bound");
    turan_cmd->add_option("--n", t_n)->required();
    turan_cmd->add_option("--k", t_k)->required();
    turan_cmd->add_option("--forbid", t_forbid, "KIND:L with KIND in linear-cycle|minimal-cycle|linear-path|minimal-path")
        ->required();
    turan_cmd->add_option("--budget", t_budget, "search node budget");

    // partition
    int p_s = 1;
    std::string p_file;
    auto* partition = app.add_subcommand("partition", "homogeneous-family partition report");
    partition->add_option("--s", p_s, "kernel threshold")->required();
    partition->add_option("file", p_file)->required();

    // centralize
    int ce_s = 1, ce_ell = 3;
    std::string ce_file;
    auto* central = app.add_subcommand("centralize", "centralized partition or a forbidden-cycle certificate");
    central->add_option("--s", ce_s, "kernel threshold")->required();
    central->add_option("--ell", ce_ell, "forbidden cycle length")->required();
    central->add_option("file", ce_file)->required();

    // core
    int co_s = 1, co_t = 1;
    bool co_exhaustive = false;
    std::string co_file;
    auto* core = app.add_subcommand("core", "recover a core pair (S, T) from the 2-kernel graph");
    core->add_option("--s", co_s, "kernel threshold")->required();
    core->add_option("--t", co_t, "core size")->required();
    core->add_flag("--exhaustive", co_exhaustive, "scan all support t-subsets");
    core->add_option("file", co_file)->required();

    // decompose
    int de_s = 1, de_ell = 3;
    std::string de_set, de_file;
    auto* decompose = app.add_subcommand("decompose", "relative decomposition around a core set");
    decompose->add_option("--s", de_s, "kernel threshold")->required();
    decompose->add_option("--set", de_set, "core vertices, e.g. \"1,2\"")->required();
    decompose->add_option("--ell", de_ell, "degree split threshold");
    decompose->add_option("file", de_file)->required();

    // stability
    int st_t = 1;
    std::string st_file;
    auto* stability = app.add_subcommand("stability", "greedy t-vertex cover and uncovered fraction");
    stability->add_option("--t", st_t, "cover size")->required();
    stability->add_option("file", st_file)->required();

    // verify
    std::string v_kind;
    int v_n = 0, v_k = 0, v_t = 0;
    auto* verify = app.add_subcommand("verify", "verify forbidden-cycle freeness of an extremal construction");
    verify->add_option("--spec", v_kind, "odd-linear|even-linear|odd-minimal|even-minimal")->required();
    verify->add_option("--n", v_n)->required();
    verify->add_option("--k", v_k)->required();
    verify->add_option("--t", v_t)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return run_construct(c_kind, c_n, c_k, c_t, c_ell, c_out, c_json);

        if (*detect) {
            const Family fam = load(d_file);
            CycleSpec spec;
            spec.ell = d_ell;
            spec.k = fam.k;
            if (d_cycle == "linear") spec.kind = CycleKind::linear;
            else if (d_cycle == "minimal") spec.kind = CycleKind::minimal;
            else if (d_cycle == "berge") spec.kind = CycleKind::berge;
            else throw std::invalid_argument("unknown cycle kind " + d_cycle);
            auto witness = contains_cycle(fam, spec);
            if (!witness) return 0;
            json out = cycle_witness_to_json(*witness);
            out["kind"] = cycle_kind_name(spec.kind);
            out["ell"] = spec.ell;
            std::cout << out.dump() << '\n';
            return 1;
        }

        if (*shadow) {
            const Family fam = load(s_file);
            const auto members = shadow_p(fam, s_p);
            std::cout << members.size() << '\n';
            for (const Edge& e : members) {
                bool first = true;
                e.for_each([&](int v) {
                    if (!first) std::cout << ' ';
                    std::cout << v;
                    first = false;
                });
                std::cout << '\n';
            }
            return 0;
        }

        if (*kernel) {
            const Family fam = load(kg_file);
            std::optional<int> r;
            if (kernel->count("--r")) r = kg_r;
            std::cout << kernel_graph_to_json(kernel_graph(fam, kg_s, r)).dump() << '\n';
            return 0;
        }

        if (*turan_cmd) {
            const ForbiddenSpec spec = parse_forbid(t_forbid, t_k);
            const auto t0 = std::chrono::steady_clock::now();
            const SearchResult res = exact_turan(t_n, t_k, spec, t_budget);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            std::cout << search_result_to_json(t_n, t_k, spec, res, ms).dump() << '\n';
            return 0;
        }

        if (*partition) {
            const Family fam = load(p_file);
            const PartitionResult res = partition_family(fam, p_s, ExtractOptions{global.seed, 32});
            json pieces = json::array();
            for (const auto& piece : res.pieces) {
                json pj = piece_to_json(piece);
                pj["violations"] = is_homogeneous(piece, fam).violations;
                pieces.push_back(std::move(pj));
            }
            std::cout << json{{"pieces", std::move(pieces)}, {"residual_size", res.residual.size()}}.dump()
                      << '\n';
            return 0;
        }

        if (*central) {
            const Family fam = load(ce_file);
            if (fam.k < 4) throw std::invalid_argument("centralize needs k >= 4");
            CycleSpec forbidden;
            forbidden.kind = fam.k >= 5 ? CycleKind::linear : CycleKind::minimal;
            forbidden.ell = ce_ell;
            forbidden.k = fam.k;
            const CentralizeResult res = centralize(fam, ce_s, forbidden, ExtractOptions{global.seed, 32});
            std::cout << centralize_to_json(res).dump() << '\n';
            return 0;
        }

        if (*core) {
            const Family fam = load(co_file);
            const auto res = extract_core(fam, co_s, co_t, co_exhaustive);
            if (!res) {
                std::cout << json{{"found", false}}.dump() << '\n';
                return 0;
            }
            std::cout << json{{"found", true}, {"S", res->core.vertices()}, {"T", res->extension.vertices()}}
                             .dump()
                      << '\n';
            return 0;
        }

        if (*decompose) {
            const Family fam = load(de_file);
            const Decomposition dec = decompose_relative(fam, de_s, parse_vertex_list(de_set), de_ell);
            std::cout << decomposition_to_json(dec).dump() << '\n';
            return 0;
        }

        if (*stability) {
            const Family fam = load(st_file);
            std::cout << stability_to_json(stability_cover(fam, st_t), fam).dump() << '\n';
            return 0;
        }

        if (*verify) {
            ExtremalSpec spec;
            if (v_kind == "odd-linear") spec.kind = ExtremalKind::odd_linear;
            else if (v_kind == "even-linear") spec.kind = ExtremalKind::even_linear;
            else if (v_kind == "odd-minimal") spec.kind = ExtremalKind::odd_minimal;
            else if (v_kind == "even-minimal") spec.kind = ExtremalKind::even_minimal;
            else throw std::invalid_argument("unknown extremal kind " + v_kind);
            spec.n = v_n;
            spec.k = v_k;
            spec.t = v_t;
            std::cout << freeness_to_json(verify_extremal_freeness(spec)).dump() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
