#pragma once

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "kgraphlab/cocycle.hpp"
#include "kgraphlab/kgraph.hpp"

namespace kgraphlab {

// Degree-truncated l^2(Lambda): one basis vector per path of degree <= bound,
// ordered degree-lexicographically then by canonical path order. Relations
// are asserted on the "safe interior" d <= bound - margin.
class TruncatedSpace {
public:
    static std::shared_ptr<const TruncatedSpace> make(const KGraph& g, Degree bound, Degree margin);

    const KGraph& graph() const { return graph_; }
    const Degree& bound() const { return bound_; }
    const Degree& margin() const { return margin_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(int i) const { return basis_[i]; }
    int index(const Path& p) const;           // -1 when out of the truncation
    Degree interior() const { return bound_ - margin_; }

private:
    KGraph graph_;
    Degree bound_, margin_;
    std::vector<Path> basis_;
    std::map<Path, int> index_;
};

class SparseOperator {
public:
    explicit SparseOperator(std::shared_ptr<const TruncatedSpace> space) : space_(std::move(space)) {}

    static SparseOperator identity(std::shared_ptr<const TruncatedSpace> space);

    const TruncatedSpace& space() const { return *space_; }
    std::shared_ptr<const TruncatedSpace> space_ptr() const { return space_; }
    const std::map<std::pair<int, int>, Complex>& entries() const { return entries_; }

    void set(int row, int col, Complex v);
    void add_to(int row, int col, Complex v);

    SparseOperator operator+(const SparseOperator& o) const;
    SparseOperator operator-(const SparseOperator& o) const;
    SparseOperator operator*(const SparseOperator& o) const;
    SparseOperator operator*(Complex s) const;
    SparseOperator adjoint() const;

    SparseOperator& prune(double eps = 1e-15);

    // Max |entry| over rows and columns whose basis degree is <= maxdeg.
    double max_abs_within(const Degree& maxdeg) const;
    double max_abs() const;

    std::map<int, Complex> column(int col) const;
    double column_norm(int col) const;

private:
    std::shared_ptr<const TruncatedSpace> space_;
    std::map<std::pair<int, int>, Complex> entries_;
};

inline double interior_residual(const SparseOperator& x, const Degree& margin) {
    return x.max_abs_within(x.space().bound() - margin);
}

// Rank of the span of the given operators, viewed as vectors of entries.
int span_rank(const std::vector<SparseOperator>& ops, double eps = 1e-9);

}  // namespace kgraphlab
