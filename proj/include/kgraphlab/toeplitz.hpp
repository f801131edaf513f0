#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgraphlab/alignment.hpp"
#include "kgraphlab/cocycle.hpp"
#include "kgraphlab/sparse.hpp"

namespace kgraphlab {

inline constexpr double kRelationTolerance = 1e-10;
inline constexpr double kPhaseIdentityTolerance = 1e-12;

// The concrete twisted Toeplitz family T_lambda xi_alpha = c(lambda,alpha)
// xi_{lambda.alpha} on a degree-truncated l^2(Lambda). Images past the bound
// are dropped; relations are asserted on the safe interior only.
class ToeplitzFamily {
public:
    ToeplitzFamily(std::shared_ptr<const TruncatedSpace> space, Cocycle cocycle,
                   std::set<int> killed_sources = {});

    const TruncatedSpace& space() const { return *space_; }
    std::shared_ptr<const TruncatedSpace> space_ptr() const { return space_; }
    const KGraph& graph() const { return space_->graph(); }
    const Cocycle& cocycle() const { return cocycle_; }
    const std::set<int>& killed_sources() const { return killed_; }

    SparseOperator op(const Path& lambda) const;
    SparseOperator vertex_op(int v) const { return op(graph().vertex_path(v)); }
    SparseOperator range_projection(const Path& lambda) const;
    SparseOperator zero() const { return SparseOperator(space_); }

private:
    std::shared_ptr<const TruncatedSpace> space_;
    Cocycle cocycle_;
    std::set<int> killed_;
    mutable std::map<Path, SparseOperator> cache_;
};

// errors: BoundTooSmall when the margin does not fit in the bound.
ToeplitzFamily build_family(const KGraph& g, const Cocycle& c, const Degree& bound, const Degree& margin);

struct RelationResult {
    std::string relation;
    size_t instances = 0;
    double max_residual = 0.0;
    bool pass = true;
    std::string worst;  // human-readable worst instance
};

struct TckReport {
    std::vector<RelationResult> relations;
    bool pass = true;
    double tolerance = kRelationTolerance;
};

// Verifies (TCK1)-(TCK4) and the t_l^* t_m expansion over all paths of
// degree <= op_cap. Each instance is measured on the interior with margin
// equal to the expression degree; TCK1 is exact.
TckReport verify_tck(const ToeplitzFamily& fam, const Degree& op_cap, double tol = kRelationTolerance);

// The unique rho with T_e T_f = rho T_f T_e on the safe interior of the
// rotation fixture; errors: NoScalarRelation, WrongGraphShape.
Complex commutation_check(const ToeplitzFamily& fam, double tol = kPhaseTolerance);

// Q(t)^E = prod_{l in E} (t_{r(E)} - t_l t_l^*); errors: MixedRange.
SparseOperator gap_projection(const ToeplitzFamily& fam, const std::set<Path>& E);

// Q(t)_lambda^E = t_l t_l^* prod_{l.a in E, d(a)>0} (t_l t_l^* - t_{l.a} t_{l.a}^*).
SparseOperator q_lambda(const ToeplitzFamily& fam, const Path& lambda, const std::set<Path>& E);

// Theta(t)_{l,m}^{PiE} = Q(t)_l^{PiE} t_l t_m^*; errors: NotDSCompatible.
SparseOperator theta_unit(const ToeplitzFamily& fam, const Path& lambda, const Path& mu, const PiSet& pi);

struct CoreBlock {
    Degree n;
    int v = -1;
    std::vector<Path> paths;  // (PiE)v intersect Lambda^n
    std::vector<Path> tails;  // T^{PiE}(n,v)
    bool zero = false;        // vanishing of prod (t_v - t_nu t_nu^*) on the interior
};

// Block decomposition of M_{PiE} keyed by (degree, source vertex).
std::vector<CoreBlock> core_blocks(const ToeplitzFamily& fam, const PiSet& pi);

struct InclusionReport {
    bool pass = true;
    double max_residual = 0.0;
    size_t pairs_checked = 0;
    std::string worst;
};

// Verifies Theta_{l,m}^{PiE} = sum_{l.n in PiG, iota^E = l} c(l,n) conj(c(m,n))
// Theta_{l.n,m.n}^{PiG} for each of the two families against its own cocycle.
InclusionReport inclusion_check(const ToeplitzFamily& fam_b, const ToeplitzFamily& fam_c,
                                const std::set<Path>& E, const std::set<Path>& G,
                                double tol = kRelationTolerance);

struct LadderLevel {
    size_t level = 0;
    double max_square_residual = 0.0;
    size_t pairs = 0;
    bool omega_identically_one = true;
    double max_omega_deviation_from_one = 0.0;
    std::vector<std::tuple<std::string, std::string, Complex>> omega_table;
};

struct LadderReport {
    bool pass = true;
    double max_residual = 0.0;
    std::vector<LadderLevel> levels;
};

// The omega_i phase-correction recursion along a chain E_0 c E_1 c ... c E_m,
// with the commuting-square check psi_{i+1} . phi_i^b = phi_i^c . psi_i
// verified entrywise in the second family's algebra.
LadderReport omega_ladder(const ToeplitzFamily& fam_b, const ToeplitzFamily& fam_c,
                          const std::vector<std::set<Path>>& chain, double tol = kRelationTolerance);

// Diagonal unitary with entry z^{d(alpha)} at xi_alpha; z has one unit
// complex per color.
SparseOperator gauge_unitary(std::shared_ptr<const TruncatedSpace> space, const std::vector<Complex>& z);

// Exact degree-grading filter: keeps entries with d(row) = d(col).
SparseOperator conditional_expectation(const SparseOperator& a);

// Average of U_z A U_z^* over the grid of n-th roots of unity per color.
SparseOperator gauge_average(const SparseOperator& a, int grid = 5);

// Zeroes every generator whose source lies in H; errors: NotHereditary.
ToeplitzFamily induced_subgraph_family(const ToeplitzFamily& fam, const std::set<int>& H);

bool is_hereditary(const KGraph& g, const std::set<int>& H);

}  // namespace kgraphlab
