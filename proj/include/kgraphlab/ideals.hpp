#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgraphlab/exhaustive.hpp"
#include "kgraphlab/kgraph.hpp"

namespace kgraphlab {

// Least hereditary superset of S under v <= w iff v.Lambda.w is nonempty.
std::set<int> hereditary_closure(const KGraph& g, const std::set<int>& S);

struct SaturatedResult {
    bool yes_within_bound = false;
    std::optional<FESet> witness;  // a derived set with s(E) in H but r(E) outside
};

// H is saturated relative to col when every E in the bounded satiation with
// s(E) inside H has r(E) in H. A `no` is definitive; `yes` covers only sets
// derivable within the bound.
SaturatedResult is_saturated_relative(const KGraph& g, const std::set<int>& H, const std::set<FESet>& col,
                                      const Degree& D);

// The subgraph on Lambda^0 \ H with the edges whose source avoids H.
// errors: NotHereditary, EmptyQuotient.
KGraph quotient_graph(const KGraph& g, const std::set<int>& H);

// E_H = { E \ EH : E in the bounded satiation, r(E) not in H }, as FE sets
// on the quotient graph. Members failing the bounded exhaustiveness audit on
// the quotient are reported through `annotations`, not as errors.
std::set<FESet> e_sub_h(const KGraph& g, const KGraph& quotient, const std::set<FESet>& col,
                        const std::set<int>& H, const Degree& D,
                        std::vector<std::string>* annotations = nullptr);

struct IdealPair {
    std::set<int> hereditary;        // vertex ids in the ambient graph
    std::set<FESet> relations;       // FE sets on the quotient graph
    std::optional<KGraph> quotient;  // absent exactly when H = Lambda^0
    std::vector<std::string> annotations;
};

// All pairs (H,B): H hereditary and saturated relative to col within the
// bound, B satiated within the bound with E_H contained in B, where B draws
// from FE sets with elements of degree <= D and size <= max_size.
std::vector<IdealPair> enumerate_ideal_pairs(const KGraph& g, const std::set<FESet>& col, const Degree& D,
                                             size_t max_size, size_t cap = kDefaultSatiationCap);

struct BoundaryPrefix {
    int base = -1;
    Path path;  // x(0, d(path)); segments give the full assignment
};

// Longest path prefix from v, of degree <= D, compatible with the bounded
// satiation at every n <= d(x) (members fully visible at the current degree
// only) and avoiding x(0,d(l)) = l for every l in `avoid`.
std::optional<BoundaryPrefix> boundary_prefix_witness(const KGraph& g, const std::set<FESet>& col, int v,
                                                      const std::optional<std::set<Path>>& avoid,
                                                      const Degree& D);

}  // namespace kgraphlab
