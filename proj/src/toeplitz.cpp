#include "kgraphlab/toeplitz.hpp"

#include <algorithm>
#include <cmath>

namespace kgraphlab {

ToeplitzFamily::ToeplitzFamily(std::shared_ptr<const TruncatedSpace> space, Cocycle cocycle,
                               std::set<int> killed_sources)
    : space_(std::move(space)), cocycle_(std::move(cocycle)), killed_(std::move(killed_sources)) {}

SparseOperator ToeplitzFamily::op(const Path& lambda) const {
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
    const KGraph& g = graph();
    SparseOperator out(space_);
    if (!killed_.count(lambda.source)) {
        for (int col = 0; col < space_->dim(); ++col) {
            const Path& alpha = space_->basis_path(col);
            if (alpha.range != lambda.source) continue;
            if (killed_.count(alpha.source)) continue;
            Path image = g.compose(lambda, alpha);
            int row = space_->index(image);
            if (row < 0) continue;  // truncated away
            out.set(row, col, cocycle_.eval(g, lambda, alpha));
        }
    }
    cache_.emplace(lambda, out);
    return out;
}

SparseOperator ToeplitzFamily::range_projection(const Path& lambda) const {
    SparseOperator t = op(lambda);
    return t * t.adjoint();
}

ToeplitzFamily build_family(const KGraph& g, const Cocycle& c, const Degree& bound, const Degree& margin) {
    return ToeplitzFamily(TruncatedSpace::make(g, bound, margin), c);
}

namespace {

struct RelationAccumulator {
    RelationResult res;
    const ToeplitzFamily* fam;
    double tol;

    void measure(const SparseOperator& diff, const Degree& expr_degree, const std::string& label) {
        ++res.instances;
        Degree interior = fam->space().bound();
        // margin = expression degree; skip instances whose interior is empty
        if (!leq(expr_degree, interior)) return;
        double r = diff.max_abs_within(interior - expr_degree);
        if (r > res.max_residual) {
            res.max_residual = r;
            res.worst = label;
        }
        if (r > tol) res.pass = false;
    }
};

}  // namespace

TckReport verify_tck(const ToeplitzFamily& fam, const Degree& op_cap, double tol) {
    const KGraph& g = fam.graph();
    const Degree zero = g.zero_degree();
    TckReport rep;
    rep.tolerance = tol;
    auto paths = g.paths_up_to(op_cap);
    std::vector<Path> ps(paths.begin(), paths.end());

    // TCK1: mutually orthogonal 0/1 diagonal projections, checked exactly.
    {
        RelationAccumulator acc{{"TCK1", 0, 0.0, true, ""}, &fam, 0.0};
        for (int v = 0; v < g.num_vertices(); ++v) {
            SparseOperator tv = fam.vertex_op(v);
            for (const auto& [rc, val] : tv.entries()) {
                ++acc.res.instances;
                bool good = rc.first == rc.second && std::abs(val - Complex{1.0, 0.0}) == 0.0 &&
                            fam.space().basis_path(rc.first).range == v;
                if (!good) {
                    acc.res.pass = false;
                    acc.res.max_residual = 1.0;
                    acc.res.worst = "t_" + g.vertex_names[v] + " is not a 0/1 diagonal";
                }
            }
            acc.measure(tv * tv - tv, zero, "t_" + g.vertex_names[v] + " idempotent");
            acc.measure(tv.adjoint() - tv, zero, "t_" + g.vertex_names[v] + " self-adjoint");
            for (int w = v + 1; w < g.num_vertices(); ++w)
                acc.measure(tv * fam.vertex_op(w), zero,
                            "t_" + g.vertex_names[v] + " t_" + g.vertex_names[w] + " orthogonal");
        }
        rep.relations.push_back(acc.res);
    }

    // TCK2: t_mu t_nu = c(mu,nu) t_{mu.nu}.
    {
        RelationAccumulator acc{{"TCK2", 0, 0.0, true, ""}, &fam, tol};
        for (const Path& mu : ps) {
            for (const Path& nu : ps) {
                if (mu.source != nu.range) continue;
                Path mn = g.compose(mu, nu);
                if (!leq(mn.degree, fam.space().bound())) continue;
                SparseOperator lhs = fam.op(mu) * fam.op(nu);
                SparseOperator rhs = fam.op(mn) * fam.cocycle().eval(g, mu, nu);
                acc.measure(lhs - rhs, mn.degree, "(" + g.path_str(mu) + ", " + g.path_str(nu) + ")");
            }
        }
        rep.relations.push_back(acc.res);
    }

    // TCK3: t_l^* t_l = t_{s(l)}.
    {
        RelationAccumulator acc{{"TCK3", 0, 0.0, true, ""}, &fam, tol};
        for (const Path& lam : ps) {
            SparseOperator lhs = fam.op(lam).adjoint() * fam.op(lam);
            acc.measure(lhs - fam.vertex_op(lam.source), lam.degree, g.path_str(lam));
        }
        rep.relations.push_back(acc.res);
    }

    // TCK4: t_mu t_mu^* t_nu t_nu^* = sum over MCE(mu,nu); projections only,
    // so no interior margin is needed.
    {
        RelationAccumulator acc{{"TCK4", 0, 0.0, true, ""}, &fam, tol};
        for (const Path& mu : ps) {
            for (const Path& nu : ps) {
                SparseOperator lhs = fam.range_projection(mu) * fam.range_projection(nu);
                SparseOperator rhs = fam.zero();
                for (const Path& lam : mce(g, mu, nu)) rhs = rhs + fam.range_projection(lam);
                acc.measure(lhs - rhs, zero, "(" + g.path_str(mu) + ", " + g.path_str(nu) + ")");
            }
        }
        rep.relations.push_back(acc.res);
    }

    // t_l^* t_m = sum_{(a,b) in Lambda^min(l,m)} conj(c(l,a)) c(m,b) t_a t_b^*.
    {
        RelationAccumulator acc{{"TL*TM", 0, 0.0, true, ""}, &fam, tol};
        for (const Path& lam : ps) {
            for (const Path& mu : ps) {
                Degree expr = join(lam.degree, mu.degree);
                if (!leq(expr, fam.space().bound())) continue;
                SparseOperator lhs = fam.op(lam).adjoint() * fam.op(mu);
                SparseOperator rhs = fam.zero();
                for (const MinPair& p : lambda_min(g, lam, mu)) {
                    Complex coef = std::conj(fam.cocycle().eval(g, lam, p.alpha)) *
                                   fam.cocycle().eval(g, mu, p.beta);
                    rhs = rhs + fam.op(p.alpha) * fam.op(p.beta).adjoint() * coef;
                }
                acc.measure(lhs - rhs, expr, "(" + g.path_str(lam) + ", " + g.path_str(mu) + ")");
            }
        }
        rep.relations.push_back(acc.res);
    }

    for (const auto& r : rep.relations) rep.pass = rep.pass && r.pass;
    return rep;
}

Complex commutation_check(const ToeplitzFamily& fam, double tol) {
    const KGraph& g = fam.graph();
    if (g.k != 2 || g.num_vertices() != 1 || g.edges.size() != 2)
        throw Error(ErrorCode::WrongGraphShape, "commutation check needs the one-vertex 2-graph");
    int e = g.edges[0].color == 1 ? 0 : 1;
    int f = 1 - e;
    SparseOperator x = fam.op(g.edge_path(e)) * fam.op(g.edge_path(f));
    SparseOperator y = fam.op(g.edge_path(f)) * fam.op(g.edge_path(e));
    Degree expr = Degree::unit(2, 0) + Degree::unit(2, 1);
    Degree interior = fam.space().bound() - expr;
    std::optional<Complex> rho;
    for (const auto& [rc, v] : y.entries()) {
        if (!leq(fam.space().basis_path(rc.first).degree, interior)) continue;
        if (!leq(fam.space().basis_path(rc.second).degree, interior)) continue;
        auto it = x.entries().find(rc);
        Complex xv = it == x.entries().end() ? Complex{0.0, 0.0} : it->second;
        Complex candidate = xv / v;
        if (rho && std::abs(candidate - *rho) > tol)
            throw Error(ErrorCode::NoScalarRelation, "entries disagree beyond tolerance");
        if (!rho) rho = candidate;
    }
    if (!rho) throw Error(ErrorCode::NoScalarRelation, "no interior entries to compare");
    // x must not have support outside y's.
    for (const auto& [rc, v] : x.entries()) {
        if (!leq(fam.space().basis_path(rc.first).degree, interior)) continue;
        if (!leq(fam.space().basis_path(rc.second).degree, interior)) continue;
        if (!y.entries().count(rc) && std::abs(v) > tol)
            throw Error(ErrorCode::NoScalarRelation, "supports differ");
    }
    return *rho;
}

SparseOperator gap_projection(const ToeplitzFamily& fam, const std::set<Path>& E) {
    if (E.empty()) throw Error(ErrorCode::InvalidArgument, "gap projection of an empty set");
    int v = E.begin()->range;
    for (const Path& lam : E)
        if (lam.range != v) throw Error(ErrorCode::MixedRange, "gap projection needs a common range");
    SparseOperator tv = fam.vertex_op(v);
    SparseOperator out = tv;
    for (const Path& lam : E) out = out * (tv - fam.range_projection(lam));
    return out;
}

SparseOperator q_lambda(const ToeplitzFamily& fam, const Path& lambda, const std::set<Path>& E) {
    const KGraph& g = fam.graph();
    SparseOperator p = fam.range_projection(lambda);
    SparseOperator out = p;
    for (const Path& e : E) {
        if (e == lambda || !leq(lambda.degree, e.degree)) continue;
        if (g.segment(e, g.zero_degree(), lambda.degree) != lambda) continue;
        out = out * (p - fam.range_projection(e));
    }
    return out;
}

SparseOperator theta_unit(const ToeplitzFamily& fam, const Path& lambda, const Path& mu, const PiSet& pi) {
    if (lambda.degree != mu.degree || lambda.source != mu.source || !pi.contains(lambda) || !pi.contains(mu))
        throw Error(ErrorCode::NotDSCompatible,
                    "(" + fam.graph().path_str(lambda) + ", " + fam.graph().path_str(mu) +
                        ") is not a d,s-compatible pair in PiE");
    return q_lambda(fam, lambda, pi.elements) * fam.op(lambda) * fam.op(mu).adjoint();
}

std::vector<CoreBlock> core_blocks(const ToeplitzFamily& fam, const PiSet& pi) {
    const KGraph& g = fam.graph();
    std::map<std::pair<Degree, int>, CoreBlock> blocks;
    for (const Path& lam : pi.elements) {
        auto& blk = blocks[{lam.degree, lam.source}];
        blk.n = lam.degree;
        blk.v = lam.source;
        blk.paths.push_back(lam);
    }
    std::vector<CoreBlock> out;
    for (auto& [key, blk] : blocks) {
        (void)key;
        // Nontrivial tails extending class members inside PiE; the exchange
        // property makes the set independent of the member used.
        std::set<Path> tails;
        const Path& rep = blk.paths.front();
        for (const Path& rho : pi.elements) {
            if (!leq(rep.degree, rho.degree) || rho.degree == rep.degree) continue;
            if (g.segment(rho, g.zero_degree(), rep.degree) != rep) continue;
            tails.insert(g.segment(rho, rep.degree, rho.degree));
        }
        blk.tails.assign(tails.begin(), tails.end());
        if (blk.tails.empty()) {
            blk.zero = false;  // empty product is the unit
        } else {
            SparseOperator tv = fam.vertex_op(blk.v);
            SparseOperator prod = tv;
            for (const Path& nu : blk.tails) prod = prod * (tv - fam.range_projection(nu));
            blk.zero = interior_residual(prod, fam.space().margin()) <= kPhaseIdentityTolerance;
        }
        out.push_back(std::move(blk));
    }
    return out;
}

namespace {

// Members of PiG extending lambda whose maximal PiE-prefix is lambda itself,
// returned as (tail nu, lambda.nu).
std::vector<std::pair<Path, Path>> refinement_tails(const KGraph& g, const Path& lambda, const PiSet& pi_e,
                                                    const PiSet& pi_g) {
    std::vector<std::pair<Path, Path>> out;
    for (const Path& rho : pi_g.elements) {
        if (!leq(lambda.degree, rho.degree)) continue;
        if (g.segment(rho, g.zero_degree(), lambda.degree) != lambda) continue;
        auto [iota, kappa] = iota_kappa(g, rho, pi_e);
        if (iota != lambda) continue;
        out.emplace_back(g.segment(rho, lambda.degree, rho.degree), rho);
        (void)kappa;
    }
    return out;
}

}  // namespace

InclusionReport inclusion_check(const ToeplitzFamily& fam_b, const ToeplitzFamily& fam_c,
                                const std::set<Path>& E, const std::set<Path>& G, double tol) {
    const KGraph& g = fam_b.graph();
    for (const Path& p : E)
        if (!G.count(p)) throw Error(ErrorCode::InvalidArgument, "E must be a subset of G");
    PiSet pi_e = pi_closure(g, E);
    PiSet pi_g = pi_closure(g, G);

    InclusionReport rep;
    for (const ToeplitzFamily* fam : {&fam_b, &fam_c}) {
        for (const Path& lam : pi_e.elements) {
            for (const Path& mu : pi_e.elements) {
                if (lam.degree != mu.degree || lam.source != mu.source) continue;
                SparseOperator lhs = theta_unit(*fam, lam, mu, pi_e);
                SparseOperator rhs = fam->zero();
                for (const auto& [nu, lam_nu] : refinement_tails(g, lam, pi_e, pi_g)) {
                    (void)lam_nu;
                    Path mu_nu = g.compose(mu, nu);
                    Complex coef = fam->cocycle().eval(g, lam, nu) * std::conj(fam->cocycle().eval(g, mu, nu));
                    rhs = rhs + theta_unit(*fam, g.compose(lam, nu), mu_nu, pi_g) * coef;
                }
                double r = interior_residual(lhs - rhs, fam->space().margin());
                ++rep.pairs_checked;
                if (r > rep.max_residual) {
                    rep.max_residual = r;
                    rep.worst = "(" + g.path_str(lam) + ", " + g.path_str(mu) + ")";
                }
                if (r > tol) rep.pass = false;
            }
        }
    }
    return rep;
}

namespace {

class OmegaTable {
public:
    OmegaTable(const KGraph& g, const Cocycle& b, const Cocycle& c, std::vector<PiSet> levels)
        : g_(g), b_(b), c_(c), levels_(std::move(levels)) {}

    // omega_0 = 1; omega_{i+1}(l,m) = omega_i(iota_l, iota_m)
    //   b(iota_m,kappa_m) c(iota_l,kappa_l) conj(b(iota_l,kappa_l) c(iota_m,kappa_m))
    // with iota/kappa taken at level i.
    Complex value(size_t i, const Path& lambda, const Path& mu) {
        if (i == 0) return {1.0, 0.0};
        auto key = std::make_tuple(i, lambda, mu);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const PiSet& pi = levels_[i - 1];
        auto [il, kl] = iota_kappa(g_, lambda, pi);
        auto [im, km] = iota_kappa(g_, mu, pi);
        Complex v = value(i - 1, il, im) * b_.eval(g_, im, km) * c_.eval(g_, il, kl) *
                    std::conj(b_.eval(g_, il, kl) * c_.eval(g_, im, km));
        memo_.emplace(key, v);
        return v;
    }

private:
    const KGraph& g_;
    const Cocycle& b_;
    const Cocycle& c_;
    std::vector<PiSet> levels_;
    std::map<std::tuple<size_t, Path, Path>, Complex> memo_;
};

}  // namespace

LadderReport omega_ladder(const ToeplitzFamily& fam_b, const ToeplitzFamily& fam_c,
                          const std::vector<std::set<Path>>& chain, double tol) {
    const KGraph& g = fam_b.graph();
    if (chain.size() < 2) throw Error(ErrorCode::InvalidArgument, "a ladder needs at least two levels");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        for (const Path& p : chain[i])
            if (!chain[i + 1].count(p))
                throw Error(ErrorCode::InvalidArgument, "chain must be increasing: E_" + std::to_string(i) +
                                                            " is not contained in E_" + std::to_string(i + 1));
    std::vector<PiSet> pis;
    for (const auto& E : chain) pis.push_back(pi_closure(g, E));
    OmegaTable omega(g, fam_b.cocycle(), fam_c.cocycle(), pis);

    LadderReport rep;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        LadderLevel lvl;
        lvl.level = i;
        for (const Path& lam : pis[i].elements) {
            for (const Path& mu : pis[i].elements) {
                if (lam.degree != mu.degree || lam.source != mu.source) continue;
                Complex w = omega.value(i, lam, mu);
                lvl.omega_table.emplace_back(g.path_str(lam), g.path_str(mu), w);
                double dev = std::abs(w - Complex{1.0, 0.0});
                lvl.max_omega_deviation_from_one = std::max(lvl.max_omega_deviation_from_one, dev);
                if (dev > kPhaseIdentityTolerance) lvl.omega_identically_one = false;

                // psi_{i+1} . phi_i^b versus phi_i^c . psi_i, both expressed
                // through the second family's matrix units.
                SparseOperator lhs = fam_c.zero();
                SparseOperator rhs = fam_c.zero();
                for (const auto& [nu, lam_nu] : refinement_tails(g, lam, pis[i], pis[i + 1])) {
                    Path mu_nu = g.compose(mu, nu);
                    SparseOperator unit = theta_unit(fam_c, lam_nu, mu_nu, pis[i + 1]);
                    Complex cb = fam_b.cocycle().eval(g, lam, nu) * std::conj(fam_b.cocycle().eval(g, mu, nu));
                    Complex cc = fam_c.cocycle().eval(g, lam, nu) * std::conj(fam_c.cocycle().eval(g, mu, nu));
                    lhs = lhs + unit * (cb * omega.value(i + 1, lam_nu, mu_nu));
                    rhs = rhs + unit * (cc * omega.value(i, lam, mu));
                }
                double r = interior_residual(lhs - rhs, fam_c.space().margin());
                lvl.max_square_residual = std::max(lvl.max_square_residual, r);
                ++lvl.pairs;
            }
        }
        rep.max_residual = std::max(rep.max_residual, lvl.max_square_residual);
        if (lvl.max_square_residual > tol) rep.pass = false;
        rep.levels.push_back(std::move(lvl));
    }
    return rep;
}

SparseOperator gauge_unitary(std::shared_ptr<const TruncatedSpace> space, const std::vector<Complex>& z) {
    if (static_cast<int>(z.size()) != space->graph().k)
        throw Error(ErrorCode::InvalidArgument, "gauge point needs one coordinate per color");
    SparseOperator u(space);
    for (int i = 0; i < space->dim(); ++i) {
        const Degree& d = space->basis_path(i).degree;
        Complex v{1.0, 0.0};
        for (int c = 0; c < d.rank(); ++c)
            for (int t = 0; t < d[c]; ++t) v *= z[c];
        u.set(i, i, v);
    }
    return u;
}

SparseOperator conditional_expectation(const SparseOperator& a) {
    SparseOperator out(a.space_ptr());
    for (const auto& [rc, v] : a.entries())
        if (a.space().basis_path(rc.first).degree == a.space().basis_path(rc.second).degree)
            out.set(rc.first, rc.second, v);
    return out;
}

SparseOperator gauge_average(const SparseOperator& a, int grid) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    auto space = a.space_ptr();
    int k = space->graph().k;
    std::vector<int> idx(k, 0);
    SparseOperator acc(space);
    long count = 0;
    while (true) {
        std::vector<Complex> z;
        for (int c = 0; c < k; ++c)
            z.push_back(std::polar(1.0, two_pi * static_cast<double>(idx[c]) / static_cast<double>(grid)));
        SparseOperator u = gauge_unitary(space, z);
        acc = acc + u * a * u.adjoint();
        ++count;
        int i = 0;
        while (i < k && ++idx[i] == grid) idx[i++] = 0;
        if (i == k) break;
    }
    return acc * Complex{1.0 / static_cast<double>(count), 0.0};
}

bool is_hereditary(const KGraph& g, const std::set<int>& H) {
    for (const EdgeRec& e : g.edges)
        if (H.count(e.range) && !H.count(e.source)) return false;
    return true;
}

ToeplitzFamily induced_subgraph_family(const ToeplitzFamily& fam, const std::set<int>& H) {
    if (!is_hereditary(fam.graph(), H))
        throw Error(ErrorCode::NotHereditary, "the vertex set is not hereditary");
    return ToeplitzFamily(fam.space_ptr(), fam.cocycle(), H);
}

}  // namespace kgraphlab
