#include "kgraphlab/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace kgraphlab {

std::shared_ptr<const TruncatedSpace> TruncatedSpace::make(const KGraph& g, Degree bound, Degree margin) {
    if (!leq(margin, bound))
        throw Error(ErrorCode::BoundTooSmall,
                    "margin " + margin.str() + " does not fit inside the bound " + bound.str());
    auto sp = std::make_shared<TruncatedSpace>();
    sp->graph_ = g;
    sp->bound_ = std::move(bound);
    sp->margin_ = std::move(margin);
    auto all = g.paths_up_to(sp->bound_);
    sp->basis_.assign(all.begin(), all.end());
    // Path ordering is (degree-lex, edges, range), which is exactly the basis
    // order contract; std::set already delivers it sorted.
    for (int i = 0; i < static_cast<int>(sp->basis_.size()); ++i) sp->index_[sp->basis_[i]] = i;
    return sp;
}

int TruncatedSpace::index(const Path& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

SparseOperator SparseOperator::identity(std::shared_ptr<const TruncatedSpace> space) {
    SparseOperator op(space);
    for (int i = 0; i < space->dim(); ++i) op.entries_[{i, i}] = 1.0;
    return op;
}

void SparseOperator::set(int row, int col, Complex v) { entries_[{row, col}] = v; }

void SparseOperator::add_to(int row, int col, Complex v) { entries_[{row, col}] += v; }

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
    SparseOperator out = *this;
    for (const auto& [rc, v] : o.entries_) out.entries_[rc] += v;
    return out.prune();
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
    SparseOperator out = *this;
    for (const auto& [rc, v] : o.entries_) out.entries_[rc] -= v;
    return out.prune();
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
    std::map<int, std::vector<std::pair<int, Complex>>> rhs_rows;
    for (const auto& [rc, v] : o.entries_) rhs_rows[rc.first].emplace_back(rc.second, v);
    SparseOperator out(space_);
    for (const auto& [rc, v] : entries_) {
        auto it = rhs_rows.find(rc.second);
        if (it == rhs_rows.end()) continue;
        for (const auto& [col, w] : it->second) out.entries_[{rc.first, col}] += v * w;
    }
    return out.prune();
}

SparseOperator SparseOperator::operator*(Complex s) const {
    SparseOperator out = *this;
    for (auto& [rc, v] : out.entries_) v *= s;
    return out.prune();
}

SparseOperator SparseOperator::adjoint() const {
    SparseOperator out(space_);
    for (const auto& [rc, v] : entries_) out.entries_[{rc.second, rc.first}] = std::conj(v);
    return out;
}

SparseOperator& SparseOperator::prune(double eps) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (std::abs(it->second) < eps)
            it = entries_.erase(it);
        else
            ++it;
    }
    return *this;
}

double SparseOperator::max_abs_within(const Degree& maxdeg) const {
    double m = 0.0;
    for (const auto& [rc, v] : entries_) {
        if (!leq(space_->basis_path(rc.first).degree, maxdeg)) continue;
        if (!leq(space_->basis_path(rc.second).degree, maxdeg)) continue;
        m = std::max(m, std::abs(v));
    }
    return m;
}

double SparseOperator::max_abs() const {
    double m = 0.0;
    for (const auto& [rc, v] : entries_) m = std::max(m, std::abs(v));
    return m;
}

std::map<int, Complex> SparseOperator::column(int col) const {
    std::map<int, Complex> out;
    for (const auto& [rc, v] : entries_)
        if (rc.second == col) out[rc.first] = v;
    return out;
}

double SparseOperator::column_norm(int col) const {
    double s = 0.0;
    for (const auto& [row, v] : column(col)) {
        (void)row;
        s += std::norm(v);
    }
    return std::sqrt(s);
}

int span_rank(const std::vector<SparseOperator>& ops, double eps) {
    if (ops.empty()) return 0;
    // Flatten over the union of supports and run Gaussian elimination.
    std::map<std::pair<int, int>, int> slot;
    for (const auto& op : ops)
        for (const auto& [rc, v] : op.entries()) {
            (void)v;
            slot.emplace(rc, 0);
        }
    int ncols = 0;
    for (auto& [rc, s] : slot) {
        (void)rc;
        s = ncols++;
    }
    std::vector<std::vector<Complex>> rows;
    for (const auto& op : ops) {
        std::vector<Complex> r(ncols, Complex{0.0, 0.0});
        for (const auto& [rc, v] : op.entries()) r[slot[rc]] = v;
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        double best = eps;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (std::abs(rows[r][c]) > best) {
                best = std::abs(rows[r][c]);
                pivot = r;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || std::abs(rows[r][c]) < eps) continue;
            Complex f = rows[r][c] / rows[rank][c];
            for (int cc = c; cc < ncols; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

}  // namespace kgraphlab
