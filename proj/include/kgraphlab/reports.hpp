#pragma once

#include <json.hpp>

#include "kgraphlab/alignment.hpp"
#include "kgraphlab/cocycle.hpp"
#include "kgraphlab/exhaustive.hpp"
#include "kgraphlab/ideals.hpp"
#include "kgraphlab/toeplitz.hpp"

namespace kgraphlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "kgraphlab/1";

Json graph_json(const KGraph& g);
Json path_list_json(const KGraph& g, const std::set<Path>& paths);
Json fe_collection_json(const KGraph& g, const std::set<FESet>& col);
Json operator_json(const SparseOperator& op);  // {dim, entries:[[row,col,re,im]]}
Json tck_report_json(const TckReport& rep);
Json cocycle_report_json(const CocycleReport& rep);
Json satiation_json(const KGraph& g, const SatiationResult& res);
Json exhaustive_json(const KGraph& g, const ExhaustiveResult& res);
Json core_blocks_json(const KGraph& g, const std::vector<CoreBlock>& blocks);
Json ladder_json(const LadderReport& rep);
Json inclusion_json(const InclusionReport& rep);
Json alignment_report_json(const FiniteAlignmentReport& rep);
Json ideal_pairs_json(const KGraph& g, const KGraph* quotient_hint, const std::vector<IdealPair>& pairs);

std::set<FESet> fe_collection_from_json(const KGraph& g, const Json& j);

}  // namespace kgraphlab
