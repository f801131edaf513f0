#include "kgraphlab/alignment.hpp"

#include <vector>

namespace kgraphlab {

std::set<MinPair> lambda_min(const KGraph& g, const Path& mu, const Path& nu) {
    std::set<MinPair> out;
    if (mu.range != nu.range) return out;
    Degree N = join(mu.degree, nu.degree);
    for (const Path& alpha : g.paths_of_degree(mu.source, N - mu.degree)) {
        Path lam = g.compose(mu, alpha);
        if (g.segment(lam, g.zero_degree(), nu.degree) == nu) {
            Path beta = g.segment(lam, nu.degree, N);
            out.insert(MinPair{alpha, beta});
        }
    }
    return out;
}

std::set<Path> mce(const KGraph& g, const Path& mu, const Path& nu) {
    std::set<Path> out;
    for (const MinPair& p : lambda_min(g, mu, nu)) out.insert(g.compose(mu, p.alpha));
    return out;
}

std::set<Path> ext(const KGraph& g, const Path& mu, const std::set<Path>& E) {
    for (const Path& lam : E)
        if (lam.range != mu.range)
            throw Error(ErrorCode::RangeMismatch,
                        "r(" + g.path_str(lam) + ") != r(" + g.path_str(mu) + ")");
    std::set<Path> out;
    for (const Path& lam : E)
        for (const MinPair& p : lambda_min(g, mu, lam)) out.insert(p.alpha);
    return out;
}

std::set<Path> mce_of_set(const KGraph& g, const std::set<Path>& F) {
    if (F.empty()) return {};
    int v = F.begin()->range;
    Degree N = g.zero_degree();
    for (const Path& a : F) {
        if (a.range != v) throw Error(ErrorCode::RangeMismatch, "MCE of a set needs a common range");
        N = join(N, a.degree);
    }
    std::set<Path> out;
    for (const Path& lam : g.paths_of_degree(v, N)) {
        bool ok = true;
        for (const Path& a : F) {
            if (g.segment(lam, g.zero_degree(), a.degree) != a) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(lam);
    }
    return out;
}

std::set<Path> vee_closure(const KGraph& g, const std::set<Path>& F) {
    if (F.empty()) return {};
    if (F.size() > 20)
        throw Error(ErrorCode::BudgetExceeded, "vee closure over " + std::to_string(F.size()) + " paths (cap 20)");
    int v = F.begin()->range;
    for (const Path& a : F)
        if (a.range != v) throw Error(ErrorCode::RangeMismatch, "vee closure needs a common range");
    std::vector<Path> members(F.begin(), F.end());
    std::set<Path> out;
    for (size_t mask = 1; mask < (size_t{1} << members.size()); ++mask) {
        std::set<Path> G;
        for (size_t i = 0; i < members.size(); ++i)
            if (mask & (size_t{1} << i)) G.insert(members[i]);
        auto m = mce_of_set(g, G);
        out.insert(m.begin(), m.end());
    }
    return out;
}

PiSet pi_closure(const KGraph& g, const std::set<Path>& E) {
    PiSet pi;
    pi.generators = E;
    pi.elements = E;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Path> cur(pi.elements.begin(), pi.elements.end());
        for (const Path& lam : cur) {
            for (const Path& mu : cur) {
                if (lam.degree != mu.degree || lam.source != mu.source) continue;
                for (const Path& sig : cur) {
                    for (const Path& tau : cur) {
                        if (sig.degree != tau.degree || sig.source != tau.source) continue;
                        for (const MinPair& p : lambda_min(g, mu, sig)) {
                            if (pi.elements.insert(g.compose(lam, p.alpha)).second) changed = true;
                            if (pi.elements.insert(g.compose(tau, p.beta)).second) changed = true;
                        }
                    }
                }
            }
        }
    }
    return pi;
}

std::pair<Path, Path> iota_kappa(const KGraph& g, const Path& lambda, const PiSet& pi) {
    Degree best = g.zero_degree();
    bool found = false;
    for (const Degree& n : degrees_up_to(lambda.degree)) {
        if (pi.contains(g.segment(lambda, g.zero_degree(), n))) {
            best = found ? join(best, n) : n;
            found = true;
        }
    }
    if (!found) return {lambda, g.vertex_path(lambda.source)};
    Path iota = g.segment(lambda, g.zero_degree(), best);
    if (!pi.contains(iota))
        throw Error(ErrorCode::InvalidArgument, "prefix set is not closed under minimal common extensions");
    Path kappa = g.segment(lambda, best, lambda.degree);
    return {iota, kappa};
}

FiniteAlignmentReport check_finitely_aligned(const KGraph& g, const Degree& D) {
    FiniteAlignmentReport rep;
    auto all = g.paths_up_to(D);
    for (const Path& mu : all) {
        for (const Path& nu : all) {
            auto lm = lambda_min(g, mu, nu);
            auto m = mce(g, mu, nu);
            ++rep.pairs_checked;
            rep.max_lambda_min = std::max(rep.max_lambda_min, lm.size());
            if (lm.size() != m.size()) {
                rep.pass = false;
                ++rep.bijection_failures;
            }
        }
    }
    return rep;
}

}  // namespace kgraphlab
