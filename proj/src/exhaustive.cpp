#include "kgraphlab/exhaustive.hpp"

#include <vector>

#include "kgraphlab/alignment.hpp"

namespace kgraphlab {

namespace {

void check_budget(size_t size, size_t cap, const char* what) {
    if (size > cap)
        throw Error(ErrorCode::BudgetExceeded,
                    std::string(what) + " exceeds the candidate-universe cap of " + std::to_string(cap));
}

// Subsets of `pool` (including the empty one), pool capped to keep 2^n sane.
template <typename F>
void for_each_subset(const std::vector<Path>& pool, F&& fn) {
    if (pool.size() > kSubsetPoolCap)
        throw Error(ErrorCode::BudgetExceeded,
                    "subset enumeration over " + std::to_string(pool.size()) + " paths (cap " +
                        std::to_string(kSubsetPoolCap) + ")");
    for (size_t mask = 0; mask < (size_t{1} << pool.size()); ++mask) {
        std::set<Path> sub;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask & (size_t{1} << i)) sub.insert(pool[i]);
        fn(std::move(sub));
    }
}

bool within_bound(const FESet& E, const Degree& D) {
    for (const Path& p : E.elements)
        if (!leq(p.degree, D)) return false;
    return true;
}

// Paths in E.Lambda, i.e. extending some member of E.
bool in_e_lambda(const KGraph& g, const Path& mu, const FESet& E) {
    for (const Path& lam : E.elements)
        if (leq(lam.degree, mu.degree) && g.segment(mu, g.zero_degree(), lam.degree) == lam) return true;
    return false;
}

std::set<FESet> sigma1(const KGraph& g, const std::set<FESet>& col, const Degree& D, long* dropped, size_t cap) {
    std::set<FESet> out = col;
    for (const FESet& E : col) {
        std::vector<Path> pool;
        for (const Path& p : g.paths_up_to(E.range, D))
            if (!p.is_vertex() && !E.elements.count(p)) pool.push_back(p);
        for_each_subset(pool, [&](std::set<Path> sub) {
            FESet F = E;
            F.elements.insert(sub.begin(), sub.end());
            out.insert(std::move(F));
        });
        check_budget(out.size(), cap, "Sigma1 result");
    }
    (void)dropped;
    return out;
}

std::set<FESet> sigma2(const KGraph& g, const std::set<FESet>& col, const Degree& D, long* dropped, size_t cap) {
    std::set<FESet> out = col;
    for (const FESet& E : col) {
        for (const Path& mu : g.paths_up_to(E.range, D)) {
            if (in_e_lambda(g, mu, E)) continue;
            std::set<Path> alphas = ext(g, mu, E.elements);
            bool bad = alphas.empty();
            for (const Path& a : alphas)
                if (!leq(a.degree, D)) bad = true;
            if (bad) {
                if (dropped) ++(*dropped);
                continue;
            }
            FESet F;
            F.range = mu.source;
            F.elements = std::move(alphas);
            out.insert(std::move(F));
        }
        check_budget(out.size(), cap, "Sigma2 result");
    }
    return out;
}

std::set<FESet> sigma3(const KGraph& g, const std::set<FESet>& col, const Degree& D, long* dropped, size_t cap) {
    std::set<FESet> out = col;
    (void)D;  // initial segments stay within any bound their parents satisfy
    (void)dropped;
    for (const FESet& E : col) {
        std::vector<Path> members(E.elements.begin(), E.elements.end());
        // Choice of 0 < n_lambda <= d(lambda) per member; enumerate the product.
        std::vector<std::vector<Degree>> options;
        size_t product = 1;
        for (const Path& lam : members) {
            std::vector<Degree> opts;
            for (const Degree& n : degrees_up_to(lam.degree))
                if (!n.is_zero()) opts.push_back(n);
            product *= opts.size();
            check_budget(product, cap, "Sigma3 choice space");
            options.push_back(std::move(opts));
        }
        std::vector<size_t> idx(members.size(), 0);
        while (true) {
            FESet F;
            F.range = E.range;
            for (size_t i = 0; i < members.size(); ++i)
                F.elements.insert(g.segment(members[i], g.zero_degree(), options[i][idx[i]]));
            out.insert(std::move(F));
            size_t i = 0;
            while (i < members.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
            if (i == members.size()) break;
        }
        check_budget(out.size(), cap, "Sigma3 result");
    }
    return out;
}

std::set<FESet> sigma4(const KGraph& g, const std::set<FESet>& col, const Degree& D, long* dropped, size_t cap) {
    std::set<FESet> out = col;
    for (const FESet& E : col) {
        std::vector<Path> members(E.elements.begin(), E.elements.end());
        for_each_subset(members, [&](std::set<Path> F) {
            if (F.empty()) return;  // identity instance, already present
            std::vector<Path> chosen(F.begin(), F.end());
            std::vector<std::vector<const FESet*>> options;
            size_t product = 1;
            for (const Path& lam : chosen) {
                std::vector<const FESet*> opts;
                for (const FESet& C : col)
                    if (C.range == lam.source) opts.push_back(&C);
                if (opts.empty()) return;  // no F_lambda available
                product *= opts.size();
                check_budget(product, cap, "Sigma4 choice space");
                options.push_back(std::move(opts));
            }
            std::vector<size_t> idx(chosen.size(), 0);
            while (true) {
                FESet R;
                R.range = E.range;
                for (const Path& p : E.elements)
                    if (!F.count(p)) R.elements.insert(p);
                bool over = false;
                for (size_t i = 0; i < chosen.size() && !over; ++i) {
                    for (const Path& mu : options[i][idx[i]]->elements) {
                        Path prod = g.compose(chosen[i], mu);
                        if (!leq(prod.degree, D)) {
                            over = true;
                            break;
                        }
                        R.elements.insert(std::move(prod));
                    }
                }
                if (over) {
                    if (dropped) ++(*dropped);
                } else {
                    out.insert(std::move(R));
                }
                size_t i = 0;
                while (i < chosen.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
                if (i == chosen.size()) break;
            }
        });
        check_budget(out.size(), cap, "Sigma4 result");
    }
    return out;
}

}  // namespace

FESet make_fe_set(const KGraph& g, const std::set<Path>& elements) {
    if (elements.empty()) throw Error(ErrorCode::InvalidArgument, "an FE set must be nonempty");
    FESet E;
    E.range = elements.begin()->range;
    for (const Path& p : elements)
        if (p.range != E.range) throw Error(ErrorCode::MixedRange, "FE set members must share a range");
    for (const Path& p : elements)
        if (p.is_vertex())
            throw Error(ErrorCode::VertexMember, "FE set may not contain its range vertex " + g.path_str(p));
    E.elements = elements;
    return E;
}

ExhaustiveResult is_exhaustive(const KGraph& g, const std::set<Path>& E, const Degree& D) {
    FESet fe = make_fe_set(g, E);  // validates MixedRange / VertexMember / nonempty
    ExhaustiveResult res;
    res.bound = D;
    for (const Path& mu : g.paths_up_to(fe.range, D)) {
        bool met = false;
        for (const Path& lam : fe.elements) {
            if (!lambda_min(g, lam, mu).empty()) {
                met = true;
                break;
            }
        }
        if (!met) {
            res.yes_within_bound = false;
            res.witness = mu;
            return res;
        }
    }
    res.yes_within_bound = true;
    return res;
}

std::set<FESet> enumerate_fe(const KGraph& g, int v, const Degree& D, size_t max_size) {
    std::vector<Path> pool;
    for (const Path& p : g.paths_up_to(v, D))
        if (!p.is_vertex()) pool.push_back(p);
    std::set<FESet> out;
    for_each_subset(pool, [&](std::set<Path> sub) {
        if (sub.empty() || sub.size() > max_size) return;
        if (is_exhaustive(g, sub, D).yes_within_bound) out.insert(make_fe_set(g, sub));
    });
    return out;
}

std::set<FESet> sigma(const KGraph& g, int i, const std::set<FESet>& col, const Degree& D, long* dropped,
                      size_t cap) {
    for (const FESet& E : col)
        if (!within_bound(E, D))
            throw Error(ErrorCode::InvalidArgument, "collection member exceeds the bound " + D.str());
    switch (i) {
        case 1: return sigma1(g, col, D, dropped, cap);
        case 2: return sigma2(g, col, D, dropped, cap);
        case 3: return sigma3(g, col, D, dropped, cap);
        case 4: return sigma4(g, col, D, dropped, cap);
        default: throw Error(ErrorCode::InvalidArgument, "sigma index must be 1..4");
    }
}

SatiationResult satiate(const KGraph& g, const std::set<FESet>& col, const Degree& D, size_t cap) {
    SatiationResult res;
    res.bound = D;
    res.derived = col;
    while (true) {
        std::set<FESet> next = res.derived;
        for (int i = 1; i <= 4; ++i) next = sigma(g, i, next, D, &res.dropped, cap);
        check_budget(next.size(), cap, "satiation");
        if (next == res.derived) break;
        res.derived = std::move(next);
    }
    res.saturated_within_bound = true;
    return res;
}

SatiatedResult is_satiated(const KGraph& g, const std::set<FESet>& col, const Degree& D, size_t cap) {
    SatiatedResult res;
    for (int i = 1; i <= 4; ++i) {
        long dropped = 0;
        std::set<FESet> step = sigma(g, i, col, D, &dropped, cap);
        for (const FESet& E : step) {
            if (!col.count(E)) {
                res.yes_within_bound = false;
                res.axiom = i;
                res.witness = E;
                return res;
            }
        }
    }
    res.yes_within_bound = true;
    return res;
}

}  // namespace kgraphlab
