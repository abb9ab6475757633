#ifndef KGS_SPARSE_SOLVER_HPP
#define KGS_SPARSE_SOLVER_HPP

#include <map>
#include <optional>
#include <vector>

#include "kgs/rational.hpp"

namespace kgs {

/// Sparse exact linear system A x = b over Q.  Rows and columns are dense
/// integer indices; the callers keep the bijections with their graph sets.
class SparseSystem {
public:
    explicit SparseSystem(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rows() const { return static_cast<int>(rows_.size()); }

    /// Entries with repeated column indices are summed; zeros dropped.
    void add_row(const std::map<int, Rational>& entries, const Rational& rhs);

    const std::map<int, Rational>& row(int r) const { return rows_[r]; }
    const Rational& rhs(int r) const { return rhs_[r]; }

private:
    int cols_;
    std::vector<std::map<int, Rational>> rows_;
    std::vector<Rational> rhs_;
};

struct SolveOutcome {
    bool consistent = false;
    /// Particular solution with non-pivot variables set to 0.  On an
    /// inconsistent system this still solves the pivoted subsystem, so
    /// b - A x is a deterministic residual supported on the dropped rows.
    std::vector<Rational> x;
};

/// Exact Gaussian elimination with rows kept integer-normalized (divided by
/// their content after each update) and Markowitz pivot selection with
/// lexicographic (column, row) tie-breaking.  Deterministic: identical
/// systems give bit-identical solutions.  The returned solution is verified
/// by exact re-multiplication.
SolveOutcome solve_sparse(const SparseSystem& sys);

/// Particular solution, or nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const SparseSystem& sys);

/// Exact rank of the coefficient matrix (rhs ignored).
int rank(const SparseSystem& sys);

}  // namespace kgs

#endif
