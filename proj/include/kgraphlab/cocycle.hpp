#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "kgraphlab/kgraph.hpp"

namespace kgraphlab {

using Complex = std::complex<double>;

inline constexpr double kPhaseTolerance = 1e-9;

// T-valued 2-cocycle on a k-graph. Evaluation is total on composable pairs
// and throws NotComposable otherwise.
class Cocycle {
public:
    enum class Kind { Trivial, Rotation, Table, Restriction };

    static Cocycle trivial();

    // c_theta(e^m f^n, e^p f^q) = exp(2 pi i theta n p) on the one-vertex
    // 2-graph with a single edge of each color; throws WrongGraphShape.
    static Cocycle rotation(const KGraph& g, double theta);

    // Tabulated values keyed by canonical path strings; must cover every
    // composable pair with d(mu.nu) <= bound. Validated eagerly: totality,
    // unit modulus, (C2) and (C1) within the bound (InvalidCocycle).
    static Cocycle table(const KGraph& g, std::map<std::pair<std::string, std::string>, Complex> values,
                         Degree bound);

    // As above but skipping validation; for fault injection in checkers.
    static Cocycle table_unchecked(std::map<std::pair<std::string, std::string>, Complex> values, Degree bound);

    // Restriction to a subgraph whose vertex/edge names embed into `parent`
    // (as produced by quotient_graph); throws NotASubgraph on evaluation if
    // a path does not embed.
    Cocycle restricted_to(const KGraph& parent) const;

    Complex eval(const KGraph& g, const Path& mu, const Path& nu) const;

    Kind kind() const { return kind_; }
    double theta() const { return theta_; }
    std::string spec_string() const;

private:
    Cocycle() = default;

    Kind kind_ = Kind::Trivial;
    double theta_ = 0.0;
    std::map<std::pair<std::string, std::string>, Complex> table_;
    Degree table_bound_;
    std::shared_ptr<const Cocycle> parent_cocycle_;
    std::shared_ptr<const KGraph> parent_graph_;
};

struct CocycleViolation {
    std::string kind;  // "unit-modulus" | "C1" | "C2"
    std::string mu, nu, lambda;
    double residual = 0.0;
};

struct CocycleReport {
    bool pass = true;
    double max_residual = 0.0;
    size_t pairs_checked = 0;
    size_t triples_checked = 0;
    std::optional<CocycleViolation> witness;
};

// Exhaustively verifies unit modulus and (C2) on pairs/paths of degree <= D
// and the 2-cocycle identity (C1) on composable triples with d(l.m.n) <= D.
CocycleReport check_cocycle_identity(const Cocycle& c, const KGraph& g, const Degree& D,
                                     double tol = kPhaseTolerance);

// Parses "trivial", "theta=<real>" or "table=<json file>".
Cocycle parse_cocycle_spec(const KGraph& g, const std::string& spec, const Degree& table_bound);

}  // namespace kgraphlab
