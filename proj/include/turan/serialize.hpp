#pragma once

#include <json.hpp>

#include "turan/constructions.hpp"
#include "turan/delta.hpp"
#include "turan/search.hpp"

namespace turan {

using nlohmann::json;

json edge_to_json(const Edge& e);
json family_to_json(const Family& f);

json cycle_witness_to_json(const CycleWitness& w);
json path_witness_to_json(const PathWitness& w);
json embedding_to_json(const EmbeddingCertificate& c);

json pattern_to_json(const IntersectionPattern& p);
json classification_to_json(const PatternClassification& c);
json piece_to_json(const HomogeneousFamily& piece);
json centralize_to_json(const CentralizeResult& r);

json search_result_to_json(int n, int k, const ForbiddenSpec& spec, const SearchResult& r,
                           double runtime_ms);
json decomposition_to_json(const Decomposition& d);
json stability_to_json(const StabilityCover& s, const Family& f);
json kernel_graph_to_json(const KernelGraph& kg);
json freeness_to_json(const FreenessReport& r);

const char* forbidden_kind_name(ForbiddenKind kind);
const char* cycle_kind_name(CycleKind kind);
const char* extremal_kind_name(ExtremalKind kind);

}  // namespace turan
