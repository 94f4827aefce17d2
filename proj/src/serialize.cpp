#include "turan/serialize.hpp"

namespace turan {

json edge_to_json(const Edge& e) { return json(e.vertices()); }

json family_to_json(const Family& f) {
    json edges = json::array();
    for (const Edge& e : f.edges) edges.push_back(edge_to_json(e));
    return json{{"n", f.n}, {"k", f.k}, {"size", f.size()}, {"edges", std::move(edges)}};
}

json cycle_witness_to_json(const CycleWitness& w) {
    json edges = json::array();
    for (const Edge& e : w.edges) edges.push_back(edge_to_json(e));
    return json{{"edges", std::move(edges)}, {"cycle_vertices", w.vertices}};
}

json path_witness_to_json(const PathWitness& w) {
    json edges = json::array();
    for (const Edge& e : w.edges) edges.push_back(edge_to_json(e));
    return json{{"edges", std::move(edges)}, {"path_vertices", w.vertices}};
}

json embedding_to_json(const EmbeddingCertificate& c) {
    json maps = json::array();
    for (const auto& [te, he] : c.mapped_edges)
        maps.push_back(json{{"template", edge_to_json(te)}, {"host", edge_to_json(he)}});
    return json{{"mapped_edges", std::move(maps)},
                {"expansion_vertices", c.expansion_vertices.vertices()}};
}

json pattern_to_json(const IntersectionPattern& p) {
    json members = json::array();
    for (IndexSet m : p.members) {
        json idx = json::array();
        for (int i = 0; i < p.k; ++i)
            if (m >> i & 1) idx.push_back(i + 1);
        members.push_back(std::move(idx));
    }
    return members;
}

json classification_to_json(const PatternClassification& c) {
    const char* type = nullptr;
    switch (c.type) {
        case PatternClassification::Type::type1: type = "type1"; break;
        case PatternClassification::Type::type2: type = "type2"; break;
        case PatternClassification::Type::rank_k: type = "rank_k"; break;
        case PatternClassification::Type::low_rank: type = "low_rank"; break;
    }
    json out{{"type", type}, {"rank", c.rank}, {"normalized", c.normalized}};
    if (c.type == PatternClassification::Type::type1) out["central"] = c.central;
    if (c.type == PatternClassification::Type::type2) {
        out["head"] = c.head;
        out["tail"] = c.tail;
    }
    return out;
}

json piece_to_json(const HomogeneousFamily& piece) {
    const PatternClassification cls = classify_pattern(piece.pattern);
    json parts = json::array();
    for (const auto& p : piece.partition.parts) parts.push_back(p.vertices());
    json out = classification_to_json(cls);
    out["pattern"] = pattern_to_json(piece.pattern);
    out["piece_size"] = piece.family.size();
    out["threshold_s"] = piece.threshold_s;
    out["parts"] = std::move(parts);
    return out;
}

json centralize_to_json(const CentralizeResult& r) {
    json assignment = json::array();
    for (std::size_t i = 0; i < r.centralized.edges.size(); ++i)
        assignment.push_back(json{{"edge", edge_to_json(r.centralized.edges[i])},
                                  {"central", r.central[i]}});
    json out{{"centralized_size", r.centralized.size()},
             {"residual_size", r.residual.size()},
             {"assignment", std::move(assignment)}};
    if (r.violation) {
        out["violation"] = cycle_witness_to_json(r.violation->witness);
        out["violation"]["kind"] = cycle_kind_name(r.violation->kind);
    } else {
        out["violation"] = nullptr;
    }
    return out;
}

json search_result_to_json(int n, int k, const ForbiddenSpec& spec, const SearchResult& r,
                           double runtime_ms) {
    json cert = json::array();
    for (const Edge& e : r.certificate.edges) cert.push_back(edge_to_json(e));
    return json{{"n", n},
                {"k", k},
                {"forbidden", std::string(forbidden_kind_name(spec.kind)) + ":" + std::to_string(spec.ell)},
                {"value", r.value},
                {"proven_optimal", r.proven_optimal},
                {"nodes", r.nodes_explored},
                {"certificate", std::move(cert)},
                {"runtime_ms", runtime_ms}};
}

json decomposition_to_json(const Decomposition& d) {
    return json{{"S", d.S.vertices()},
                {"W", d.W.vertices()},
                {"Z", d.Z.vertices()},
                {"meets_S", d.meets_s},
                {"G0", family_to_json(d.g0)},
                {"G1", family_to_json(d.g1)},
                {"A", family_to_json(d.a)},
                {"B", family_to_json(d.b)},
                {"G2", family_to_json(d.g2)},
                {"D_size", d.d.size()}};
}

json stability_to_json(const StabilityCover& s, const Family& f) {
    return json{{"S", s.S.vertices()},
                {"family_size", f.size()},
                {"uncovered", s.uncovered},
                {"uncovered_fraction", s.uncovered_fraction}};
}

json kernel_graph_to_json(const KernelGraph& kg) {
    json members = json::array();
    for (const Edge& e : kg.members) members.push_back(edge_to_json(e));
    return json{{"threshold_s", kg.threshold_s}, {"size", kg.members.size()}, {"members", std::move(members)}};
}

json freeness_to_json(const FreenessReport& r) {
    return json{{"kind", extremal_kind_name(r.spec.kind)},
                {"n", r.spec.n},
                {"k", r.spec.k},
                {"t", r.spec.t},
                {"ell", r.ell},
                {"size", r.family_size},
                {"free", r.free},
                {"nodes", r.nodes},
                {"runtime_ms", r.runtime_ms}};
}

const char* forbidden_kind_name(ForbiddenKind kind) {
    switch (kind) {
        case ForbiddenKind::linear_cycle: return "linear-cycle";
        case ForbiddenKind::minimal_cycle: return "minimal-cycle";
        case ForbiddenKind::linear_path: return "linear-path";
        case ForbiddenKind::minimal_path: return "minimal-path";
    }
    return "?";
}

const char* cycle_kind_name(CycleKind kind) {
    switch (kind) {
        case CycleKind::linear: return "linear";
        case CycleKind::minimal: return "minimal";
        case CycleKind::berge: return "berge";
    }
    return "?";
}

const char* extremal_kind_name(ExtremalKind kind) {
    switch (kind) {
        case ExtremalKind::odd_linear: return "odd-linear";
        case ExtremalKind::even_linear: return "even-linear";
        case ExtremalKind::odd_minimal: return "odd-minimal";
        case ExtremalKind::even_minimal: return "even-minimal";
    }
    return "?";
}

}  // namespace turan
