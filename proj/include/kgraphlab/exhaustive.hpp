#pragma once

#include <optional>
#include <set>

#include "kgraphlab/kgraph.hpp"

namespace kgraphlab {

// Finite set of nonzero-degree paths with a common range. Candidate member
// of FE(Lambda); exhaustiveness is always certified against a degree bound.
struct FESet {
    int range = -1;
    std::set<Path> elements;

    auto operator<=>(const FESet&) const = default;
};

FESet make_fe_set(const KGraph& g, const std::set<Path>& elements);

struct ExhaustiveResult {
    bool yes_within_bound = false;
    std::optional<Path> witness;  // first mu in v.Lambda missed by E; definitive at any bound
    Degree bound;
};

// Checks every mu in v.Lambda with d(mu) <= D against E. A `no` is a true
// counterexample for every bound; a `yes` certifies only degrees <= D.
ExhaustiveResult is_exhaustive(const KGraph& g, const std::set<Path>& E, const Degree& D);

// All subsets of (v.Lambda \ {v}) with elements of degree <= D and size <=
// max_size that pass is_exhaustive at bound D.
std::set<FESet> enumerate_fe(const KGraph& g, int v, const Degree& D, size_t max_size);

inline constexpr size_t kDefaultSatiationCap = 1'000'000;
inline constexpr size_t kSubsetPoolCap = 20;

// One application of Sigma_i (i in 1..4), restricted to result sets whose
// elements all have degree <= D. Always contains the input collection.
// Over-bound or degenerate results are counted into *dropped.
std::set<FESet> sigma(const KGraph& g, int i, const std::set<FESet>& col, const Degree& D,
                      long* dropped = nullptr, size_t cap = kDefaultSatiationCap);

struct SatiationResult {
    std::set<FESet> derived;
    Degree bound;
    bool saturated_within_bound = false;
    long dropped = 0;
};

// Iterates Sigma = Sigma4 . Sigma3 . Sigma2 . Sigma1 within bound D until a
// fixpoint. Membership in `derived` is sound (each member has a
// Sigma-derivation); absence is inconclusive beyond the bound.
SatiationResult satiate(const KGraph& g, const std::set<FESet>& col, const Degree& D,
                        size_t cap = kDefaultSatiationCap);

struct SatiatedResult {
    bool yes_within_bound = false;
    int axiom = 0;                 // violated axiom 1..4 when no
    std::optional<FESet> witness;  // a derivable set missing from the collection
};

SatiatedResult is_satiated(const KGraph& g, const std::set<FESet>& col, const Degree& D,
                           size_t cap = kDefaultSatiationCap);

}  // namespace kgraphlab
