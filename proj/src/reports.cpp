#include "kgraphlab/reports.hpp"

namespace kgraphlab {

Json graph_json(const KGraph& g) {
    Json j;
    j["k"] = g.k;
    j["vertices"] = g.vertex_names;
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json je;
        je["id"] = e.name;
        je["color"] = e.color;
        je["range"] = g.vertex_names[e.range];
        je["source"] = g.vertex_names[e.source];
        edges.push_back(je);
    }
    j["edges"] = edges;
    Json squares = Json::array();
    for (const auto& [lhs, rhs] : g.sorted_to_unsorted)
        squares.push_back({g.edges[lhs.first].name, g.edges[lhs.second].name, g.edges[rhs.first].name,
                           g.edges[rhs.second].name});
    j["squares"] = squares;
    return j;
}

Json path_list_json(const KGraph& g, const std::set<Path>& paths) {
    Json arr = Json::array();
    for (const Path& p : paths) arr.push_back(g.path_str(p));
    return arr;
}

Json fe_collection_json(const KGraph& g, const std::set<FESet>& col) {
    Json arr = Json::array();
    for (const FESet& E : col) arr.push_back(path_list_json(g, E.elements));
    return arr;
}

Json operator_json(const SparseOperator& op) {
    Json j;
    j["dim"] = op.space().dim();
    Json entries = Json::array();
    for (const auto& [rc, v] : op.entries())
        entries.push_back({rc.first, rc.second, v.real(), v.imag()});
    j["entries"] = entries;
    return j;
}

Json tck_report_json(const TckReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["tolerance"] = rep.tolerance;
    Json rels = Json::array();
    for (const auto& r : rep.relations) {
        Json jr;
        jr["relation"] = r.relation;
        jr["instances"] = r.instances;
        jr["max_residual"] = r.max_residual;
        jr["pass"] = r.pass;
        if (!r.worst.empty()) jr["worst"] = r.worst;
        rels.push_back(jr);
    }
    j["relations"] = rels;
    return j;
}

Json cocycle_report_json(const CocycleReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["max_residual"] = rep.max_residual;
    j["pairs_checked"] = rep.pairs_checked;
    j["triples_checked"] = rep.triples_checked;
    if (rep.witness) {
        Json w;
        w["kind"] = rep.witness->kind;
        w["mu"] = rep.witness->mu;
        w["nu"] = rep.witness->nu;
        if (!rep.witness->lambda.empty()) w["lambda"] = rep.witness->lambda;
        w["residual"] = rep.witness->residual;
        j["witness"] = w;
    }
    return j;
}

Json satiation_json(const KGraph& g, const SatiationResult& res) {
    Json j;
    j["bound"] = res.bound.coords;
    j["dropped"] = res.dropped;
    j["saturated_within_bound"] = res.saturated_within_bound;
    j["derived"] = fe_collection_json(g, res.derived);
    return j;
}

Json exhaustive_json(const KGraph& g, const ExhaustiveResult& res) {
    Json j;
    j["bound"] = res.bound.coords;
    j["exhaustive_within_bound"] = res.yes_within_bound;
    if (res.witness) j["witness"] = g.path_str(*res.witness);
    return j;
}

Json core_blocks_json(const KGraph& g, const std::vector<CoreBlock>& blocks) {
    Json arr = Json::array();
    for (const auto& b : blocks) {
        Json jb;
        jb["degree"] = b.n.coords;
        jb["vertex"] = g.vertex_names[b.v];
        Json paths = Json::array();
        for (const Path& p : b.paths) paths.push_back(g.path_str(p));
        jb["paths"] = paths;
        Json tails = Json::array();
        for (const Path& p : b.tails) tails.push_back(g.path_str(p));
        jb["tails"] = tails;
        jb["zero"] = b.zero;
        jb["size"] = b.paths.size();
        arr.push_back(jb);
    }
    return arr;
}

Json ladder_json(const LadderReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["max_residual"] = rep.max_residual;
    Json levels = Json::array();
    for (const auto& lvl : rep.levels) {
        Json jl;
        jl["level"] = lvl.level;
        jl["pairs"] = lvl.pairs;
        jl["max_square_residual"] = lvl.max_square_residual;
        jl["omega_identically_one"] = lvl.omega_identically_one;
        jl["max_omega_deviation_from_one"] = lvl.max_omega_deviation_from_one;
        Json tab = Json::array();
        for (const auto& [lam, mu, w] : lvl.omega_table) tab.push_back({lam, mu, w.real(), w.imag()});
        jl["omega"] = tab;
        levels.push_back(jl);
    }
    j["levels"] = levels;
    return j;
}

Json inclusion_json(const InclusionReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["max_residual"] = rep.max_residual;
    j["pairs_checked"] = rep.pairs_checked;
    if (!rep.worst.empty()) j["worst"] = rep.worst;
    return j;
}

Json alignment_report_json(const FiniteAlignmentReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["pairs_checked"] = rep.pairs_checked;
    j["max_lambda_min"] = rep.max_lambda_min;
    j["bijection_failures"] = rep.bijection_failures;
    return j;
}

Json ideal_pairs_json(const KGraph& g, const KGraph* quotient_hint, const std::vector<IdealPair>& pairs) {
    (void)quotient_hint;
    Json arr = Json::array();
    for (const auto& pair : pairs) {
        Json jp;
        Json H = Json::array();
        for (int v : pair.hereditary) H.push_back(g.vertex_names[v]);
        jp["H"] = H;
        Json B = Json::array();
        for (const FESet& E : pair.relations) {
            Json els = Json::array();
            for (const Path& p : E.elements) els.push_back(pair.quotient->path_str(p));
            B.push_back(els);
        }
        jp["B"] = B;
        jp["annotations"] = pair.annotations;
        arr.push_back(jp);
    }
    return arr;
}

std::set<FESet> fe_collection_from_json(const KGraph& g, const Json& j) {
    std::set<FESet> out;
    for (const auto& entry : j) {
        std::set<Path> elements;
        for (const auto& lit : entry) elements.insert(g.parse_path(lit.get<std::string>()));
        out.insert(make_fe_set(g, elements));
    }
    return out;
}

}  // namespace kgraphlab
