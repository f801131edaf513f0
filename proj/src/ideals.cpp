#include "kgraphlab/ideals.hpp"

#include <algorithm>
#include <deque>

#include "kgraphlab/alignment.hpp"
#include "kgraphlab/toeplitz.hpp"

namespace kgraphlab {

std::set<int> hereditary_closure(const KGraph& g, const std::set<int>& S) {
    std::set<int> H = S;
    std::deque<int> work(S.begin(), S.end());
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        for (const EdgeRec& e : g.edges) {
            if (e.range == v && !H.count(e.source)) {
                H.insert(e.source);
                work.push_back(e.source);
            }
        }
    }
    return H;
}

SaturatedResult is_saturated_relative(const KGraph& g, const std::set<int>& H, const std::set<FESet>& col,
                                      const Degree& D) {
    if (!is_hereditary(g, H)) throw Error(ErrorCode::NotHereditary, "H is not hereditary");
    SaturatedResult res;
    for (const FESet& E : satiate(g, col, D).derived) {
        bool sources_inside = true;
        for (const Path& lam : E.elements)
            if (!H.count(lam.source)) sources_inside = false;
        if (sources_inside && !H.count(E.range)) {
            res.yes_within_bound = false;
            res.witness = E;
            return res;
        }
    }
    res.yes_within_bound = true;
    return res;
}

KGraph quotient_graph(const KGraph& g, const std::set<int>& H) {
    if (!is_hereditary(g, H)) throw Error(ErrorCode::NotHereditary, "H is not hereditary");
    Skeleton sk;
    sk.k = g.k;
    std::vector<int> vmap(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (H.count(v)) continue;
        vmap[v] = static_cast<int>(sk.vertices.size());
        sk.vertices.push_back(g.vertex_names[v]);
    }
    if (sk.vertices.empty()) throw Error(ErrorCode::EmptyQuotient, "H removes every vertex");
    std::vector<int> emap(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const EdgeRec& rec = g.edges[e];
        if (H.count(rec.source)) continue;  // heredity keeps the range too
        EdgeRec out = rec;
        out.range = vmap[rec.range];
        out.source = vmap[rec.source];
        emap[e] = static_cast<int>(sk.edges.size());
        sk.edges.push_back(out);
    }
    FactorizationRule rules;
    for (const auto& [lhs, rhs] : g.sorted_to_unsorted) {
        // A square survives iff its common source does.
        if (emap[lhs.first] < 0 || emap[lhs.second] < 0 || emap[rhs.first] < 0 || emap[rhs.second] < 0) continue;
        SquareRule sq;
        sq.a = emap[lhs.first];
        sq.b = emap[lhs.second];
        sq.b2 = emap[rhs.first];
        sq.a2 = emap[rhs.second];
        rules.squares.push_back(sq);
    }
    return validate_kgraph(sk, rules);
}

namespace {

Path embed_into(const KGraph& from, const KGraph& to, const Path& p) {
    if (p.is_vertex()) {
        auto it = to.vertex_id.find(from.vertex_names[p.range]);
        if (it == to.vertex_id.end())
            throw Error(ErrorCode::NotASubgraph, "vertex " + from.vertex_names[p.range] + " does not embed");
        return to.vertex_path(it->second);
    }
    std::vector<int> seq;
    for (int e : p.edges) {
        auto it = to.edge_id.find(from.edges[e].name);
        if (it == to.edge_id.end())
            throw Error(ErrorCode::NotASubgraph, "edge " + from.edges[e].name + " does not embed");
        seq.push_back(it->second);
    }
    return to.make_path(seq);
}

}  // namespace

std::set<FESet> e_sub_h(const KGraph& g, const KGraph& quotient, const std::set<FESet>& col,
                        const std::set<int>& H, const Degree& D, std::vector<std::string>* annotations) {
    if (!is_hereditary(g, H)) throw Error(ErrorCode::NotHereditary, "H is not hereditary");
    auto sat = is_saturated_relative(g, H, col, D);
    if (!sat.yes_within_bound)
        throw Error(ErrorCode::NotSaturated, "H is not saturated relative to the given relations");
    std::set<FESet> out;
    for (const FESet& E : satiate(g, col, D).derived) {
        if (H.count(E.range)) continue;
        std::set<Path> trimmed;
        for (const Path& lam : E.elements)
            if (!H.count(lam.source)) trimmed.insert(embed_into(g, quotient, lam));
        if (trimmed.empty()) continue;  // cannot happen for saturated H; bounded-data guard
        FESet F = make_fe_set(quotient, trimmed);
        auto audit = is_exhaustive(quotient, F.elements, D);
        if (!audit.yes_within_bound && annotations) {
            annotations->push_back("E_H member at " + quotient.vertex_names[F.range] +
                                   " failed the bounded exhaustiveness audit (bound insufficiency)");
        }
        out.insert(std::move(F));
    }
    return out;
}

std::vector<IdealPair> enumerate_ideal_pairs(const KGraph& g, const std::set<FESet>& col, const Degree& D,
                                             size_t max_size, size_t cap) {
    if (g.num_vertices() > 20)
        throw Error(ErrorCode::BudgetExceeded, "hereditary enumeration over >20 vertices");
    std::vector<IdealPair> out;
    for (size_t mask = 0; mask < (size_t{1} << g.num_vertices()); ++mask) {
        std::set<int> H;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (mask & (size_t{1} << v)) H.insert(v);
        if (!is_hereditary(g, H)) continue;
        if (!is_saturated_relative(g, H, col, D).yes_within_bound) continue;

        if (H.size() == static_cast<size_t>(g.num_vertices())) {
            IdealPair pair;
            pair.hereditary = H;
            pair.annotations.push_back("EmptyQuotient");
            out.push_back(std::move(pair));
            continue;
        }
        KGraph quotient = quotient_graph(g, H);
        std::vector<std::string> annotations;
        std::set<FESet> forced = e_sub_h(g, quotient, col, H, D, &annotations);

        std::set<FESet> candidates;
        for (int v = 0; v < quotient.num_vertices(); ++v) {
            auto batch = enumerate_fe(quotient, v, D, max_size);
            candidates.insert(batch.begin(), batch.end());
        }
        for (const FESet& E : forced) candidates.erase(E);
        std::vector<FESet> pool(candidates.begin(), candidates.end());
        if (pool.size() > kSubsetPoolCap)
            throw Error(ErrorCode::BudgetExceeded, "FE-set lattice enumeration over " +
                                                       std::to_string(pool.size()) + " sets");
        for (size_t sub = 0; sub < (size_t{1} << pool.size()); ++sub) {
            std::set<FESet> B = forced;
            for (size_t i = 0; i < pool.size(); ++i)
                if (sub & (size_t{1} << i)) B.insert(pool[i]);
            if (!is_satiated(quotient, B, D, cap).yes_within_bound) continue;
            IdealPair pair;
            pair.hereditary = H;
            pair.relations = std::move(B);
            pair.quotient = quotient;
            pair.annotations = annotations;
            out.push_back(std::move(pair));
        }
    }
    return out;
}

std::optional<BoundaryPrefix> boundary_prefix_witness(const KGraph& g, const std::set<FESet>& col, int v,
                                                      const std::optional<std::set<Path>>& avoid,
                                                      const Degree& D) {
    auto derived = satiate(g, col, D).derived;
    std::vector<Path> candidates;
    for (const Path& p : g.paths_up_to(v, D)) candidates.push_back(p);
    std::stable_sort(candidates.begin(), candidates.end(), [](const Path& a, const Path& b) {
        return a.degree.total() > b.degree.total();
    });
    for (const Path& x : candidates) {
        bool ok = true;
        if (avoid) {
            for (const Path& lam : *avoid) {
                if (!leq(lam.degree, x.degree)) continue;
                if (g.segment(x, g.zero_degree(), lam.degree) == lam) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        // Compatibility against satiation members fully visible inside x.
        for (const Degree& n : degrees_up_to(x.degree)) {
            int at = g.segment(x, g.zero_degree(), n).source;
            for (const FESet& E : derived) {
                if (E.range != at) continue;
                bool visible = true;
                for (const Path& lam : E.elements)
                    if (!leq(n + lam.degree, x.degree)) visible = false;
                if (!visible) continue;
                bool met = false;
                for (const Path& lam : E.elements) {
                    if (g.segment(x, n, n + lam.degree) == lam) {
                        met = true;
                        break;
                    }
                }
                if (!met) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return BoundaryPrefix{v, x};
    }
    return std::nullopt;
}

}  // namespace kgraphlab
