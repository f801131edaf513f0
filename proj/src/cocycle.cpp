#include "kgraphlab/cocycle.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace kgraphlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Cocycle Cocycle::trivial() {
    Cocycle c;
    c.kind_ = Kind::Trivial;
    return c;
}

Cocycle Cocycle::rotation(const KGraph& g, double theta) {
    if (g.k != 2 || g.num_vertices() != 1 || g.edges.size() != 2 || g.edges[0].color == g.edges[1].color)
        throw Error(ErrorCode::WrongGraphShape,
                    "the rotation cocycle needs the one-vertex 2-graph with a single edge per color");
    if (theta < 0.0 || theta >= 1.0)
        throw Error(ErrorCode::InvalidArgument, "theta must lie in [0,1)");
    Cocycle c;
    c.kind_ = Kind::Rotation;
    c.theta_ = theta;
    return c;
}

Cocycle Cocycle::table_unchecked(std::map<std::pair<std::string, std::string>, Complex> values, Degree bound) {
    Cocycle c;
    c.kind_ = Kind::Table;
    c.table_ = std::move(values);
    c.table_bound_ = std::move(bound);
    return c;
}

Cocycle Cocycle::table(const KGraph& g, std::map<std::pair<std::string, std::string>, Complex> values,
                       Degree bound) {
    Cocycle c = table_unchecked(std::move(values), std::move(bound));
    // Fail fast; downstream operator builds assume (C1)/(C2).
    auto report = check_cocycle_identity(c, g, c.table_bound_);
    if (!report.pass) {
        const auto& w = *report.witness;
        throw Error(ErrorCode::InvalidCocycle,
                    "table violates " + w.kind + " at (" + w.mu + ", " + w.nu + ")" +
                        (w.lambda.empty() ? "" : " with lambda = " + w.lambda));
    }
    return c;
}

Cocycle Cocycle::restricted_to(const KGraph& parent) const {
    Cocycle c;
    c.kind_ = Kind::Restriction;
    c.parent_cocycle_ = std::make_shared<Cocycle>(*this);
    c.parent_graph_ = std::make_shared<KGraph>(parent);
    return c;
}

Complex Cocycle::eval(const KGraph& g, const Path& mu, const Path& nu) const {
    if (mu.source != nu.range)
        throw Error(ErrorCode::NotComposable,
                    "cocycle evaluated on a non-composable pair (" + g.path_str(mu) + ", " + g.path_str(nu) + ")");
    switch (kind_) {
        case Kind::Trivial:
            return {1.0, 0.0};
        case Kind::Rotation: {
            long n = mu.degree[1], p = nu.degree[0];
            double arg = kTwoPi * theta_ * static_cast<double>(n) * static_cast<double>(p);
            return std::polar(1.0, arg);
        }
        case Kind::Table: {
            if (!leq(mu.degree + nu.degree, table_bound_))
                throw Error(ErrorCode::InvalidCocycle,
                            "pair (" + g.path_str(mu) + ", " + g.path_str(nu) + ") exceeds the table bound " +
                                table_bound_.str());
            auto it = table_.find({g.path_str(mu), g.path_str(nu)});
            if (it == table_.end())
                throw Error(ErrorCode::InvalidCocycle,
                            "pair (" + g.path_str(mu) + ", " + g.path_str(nu) + ") missing from the table");
            return it->second;
        }
        case Kind::Restriction: {
            const KGraph& pg = *parent_graph_;
            auto embed = [&](const Path& p) {
                if (p.is_vertex()) {
                    auto it = pg.vertex_id.find(g.vertex_names[p.range]);
                    if (it == pg.vertex_id.end())
                        throw Error(ErrorCode::NotASubgraph, "vertex " + g.vertex_names[p.range] + " not in parent");
                    return pg.vertex_path(it->second);
                }
                std::vector<int> seq;
                for (int e : p.edges) {
                    auto it = pg.edge_id.find(g.edges[e].name);
                    if (it == pg.edge_id.end())
                        throw Error(ErrorCode::NotASubgraph, "edge " + g.edges[e].name + " not in parent");
                    seq.push_back(it->second);
                }
                return pg.make_path(seq);
            };
            return parent_cocycle_->eval(pg, embed(mu), embed(nu));
        }
    }
    throw Error(ErrorCode::InvalidCocycle, "corrupt cocycle kind");
}

std::string Cocycle::spec_string() const {
    switch (kind_) {
        case Kind::Trivial: return "trivial";
        case Kind::Rotation: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "theta=%.17g", theta_);
            return buf;
        }
        case Kind::Table: return "table";
        case Kind::Restriction: return "restriction(" + parent_cocycle_->spec_string() + ")";
    }
    return "?";
}

CocycleReport check_cocycle_identity(const Cocycle& c, const KGraph& g, const Degree& D, double tol) {
    CocycleReport rep;
    auto note = [&](const std::string& kind, double residual, const Path& mu, const Path& nu, const Path* lam) {
        rep.max_residual = std::max(rep.max_residual, residual);
        if (residual > tol && rep.pass) {
            rep.pass = false;
            CocycleViolation v;
            v.kind = kind;
            v.mu = g.path_str(mu);
            v.nu = g.path_str(nu);
            if (lam) v.lambda = g.path_str(*lam);
            v.residual = residual;
            rep.witness = v;
        }
    };

    auto all = g.paths_up_to(D);
    for (const Path& lam : all) {
        double r1 = std::abs(c.eval(g, lam, g.vertex_path(lam.source)) - Complex{1.0, 0.0});
        double r2 = std::abs(c.eval(g, g.vertex_path(lam.range), lam) - Complex{1.0, 0.0});
        note("C2", r1, lam, g.vertex_path(lam.source), nullptr);
        note("C2", r2, g.vertex_path(lam.range), lam, nullptr);
    }

    for (const Path& lam : all) {
        for (const Path& mu : g.paths_up_to(lam.source, D - lam.degree)) {
            Complex v = c.eval(g, lam, mu);
            note("unit-modulus", std::abs(std::abs(v) - 1.0), lam, mu, nullptr);
            ++rep.pairs_checked;
            Path lm = g.compose(lam, mu);
            for (const Path& nu : g.paths_up_to(mu.source, D - lm.degree)) {
                Path mn = g.compose(mu, nu);
                Complex lhs = c.eval(g, lam, mu) * c.eval(g, lm, nu);
                Complex rhs = c.eval(g, mu, nu) * c.eval(g, lam, mn);
                note("C1", std::abs(lhs - rhs), lam, mu, &nu);
                ++rep.triples_checked;
            }
        }
    }
    return rep;
}

Cocycle parse_cocycle_spec(const KGraph& g, const std::string& spec, const Degree& table_bound) {
    if (spec == "trivial") return Cocycle::trivial();
    if (spec.rfind("theta=", 0) == 0) {
        double theta = 0.0;
        try {
            theta = std::stod(spec.substr(6));
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad cocycle spec '" + spec + "'");
        }
        return Cocycle::rotation(g, theta);
    }
    if (spec.rfind("table=", 0) == 0) {
        std::string path = spec.substr(6);
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open cocycle table '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw Error(ErrorCode::ParseError, "bad JSON in '" + path + "': " + e.what());
        }
        std::map<std::pair<std::string, std::string>, Complex> values;
        Degree bound = table_bound;
        if (j.contains("bound")) {
            std::vector<int> coords = j["bound"].get<std::vector<int>>();
            bound = Degree(coords);
            if (bound.rank() != g.k)
                throw Error(ErrorCode::InvalidArgument, "table bound rank does not match the graph");
        }
        for (const auto& entry : j.at("pairs")) {
            values[{entry.at("mu").get<std::string>(), entry.at("nu").get<std::string>()}] =
                Complex(entry.at("re").get<double>(), entry.at("im").get<double>());
        }
        return Cocycle::table(g, std::move(values), bound);
    }
    throw Error(ErrorCode::InvalidArgument, "bad cocycle spec '" + spec + "' (trivial | theta=<real> | table=<file>)");
}

}  // namespace kgraphlab
