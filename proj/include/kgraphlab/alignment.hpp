#pragma once

#include <set>
#include <utility>

#include "kgraphlab/kgraph.hpp"

namespace kgraphlab {

struct MinPair {
    Path alpha;
    Path beta;
    auto operator<=>(const MinPair&) const = default;
};

// Lambda^min(mu,nu) = {(alpha,beta) : mu.alpha = nu.beta, d(mu.alpha) = d(mu) v d(nu)}.
std::set<MinPair> lambda_min(const KGraph& g, const Path& mu, const Path& nu);

// Minimal common extensions mu.alpha themselves.
std::set<Path> mce(const KGraph& g, const Path& mu, const Path& nu);

// Ext(mu;E); every member of E must have range r(mu).
std::set<Path> ext(const KGraph& g, const Path& mu, const std::set<Path>& E);

// MCE(F): common extensions of everything in F of degree exactly v_{a in F} d(a).
std::set<Path> mce_of_set(const KGraph& g, const std::set<Path>& F);

// vF = union of MCE(G) over nonempty G subset F. |F| capped at 20.
std::set<Path> vee_closure(const KGraph& g, const std::set<Path>& F);

struct PiSet {
    std::set<Path> elements;
    std::set<Path> generators;

    bool contains(const Path& p) const { return elements.count(p) > 0; }
};

// Least finite superset of E closed under the rule
//   (lambda,mu),(sigma,tau) in F x_{d,s} F  =>  lambda.alpha, tau.beta in F
//   for (alpha,beta) in Lambda^min(mu,sigma).
PiSet pi_closure(const KGraph& g, const std::set<Path>& E);

// (iota, kappa): the maximal initial segment of lambda lying in PiE and the
// complementary tail; iota = lambda when no initial segment qualifies.
std::pair<Path, Path> iota_kappa(const KGraph& g, const Path& lambda, const PiSet& pi);

struct FiniteAlignmentReport {
    bool pass = true;
    size_t pairs_checked = 0;
    size_t max_lambda_min = 0;
    size_t bijection_failures = 0;
};

// Audits |MCE(mu,nu)| = |Lambda^min(mu,nu)| over all pairs of degree <= D.
FiniteAlignmentReport check_finitely_aligned(const KGraph& g, const Degree& D);

}  // namespace kgraphlab
