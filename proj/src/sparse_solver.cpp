#include "kgs/sparse_solver.hpp"

#include <algorithm>
#include <limits>

namespace kgs {

void SparseSystem::add_row(const std::map<int, Rational>& entries, const Rational& rhs) {
    std::map<int, Rational> row;
    for (const auto& [c, v] : entries) {
        if (c < 0 || c >= cols_) throw std::out_of_range("column index");
        if (v == 0) continue;
        auto [it, fresh] = row.emplace(c, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) row.erase(it);
        }
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
}

namespace {

struct Elimination {
    // rows in working form, paired with their rhs
    std::vector<std::map<int, Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order
    std::vector<bool> pivoted_row;
    bool consistent = true;

    // Divides the row by the gcd of numerators over lcm of denominators,
    // keeping entries integral and small; the sign of the leading entry is
    // normalized positive.  Pure row scaling: the solution set is unchanged.
    static void normalize(std::map<int, Rational>& row, Rational& rhs) {
        if (row.empty()) return;
        mpz_class num_gcd = 0, den_lcm = 1;
        auto absorb = [&](const Rational& v) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        };
        for (const auto& [c, v] : row) absorb(v);
        if (rhs != 0) absorb(rhs);
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (row.begin()->second < 0) scale = -scale;
        for (auto& [c, v] : row) v *= scale;
        rhs *= scale;
    }
};

Elimination eliminate(const SparseSystem& sys) {
    Elimination e;
    const int nrows = sys.rows();
    e.rows.resize(nrows);
    e.rhs.resize(nrows);
    e.pivoted_row.assign(nrows, false);
    std::vector<int> col_count(sys.cols(), 0);
    for (int r = 0; r < nrows; ++r) {
        e.rows[r] = sys.row(r);
        e.rhs[r] = sys.rhs(r);
        Elimination::normalize(e.rows[r], e.rhs[r]);
        for (const auto& [c, v] : e.rows[r]) ++col_count[c];
    }

    while (true) {
        // Markowitz: minimize (row_nnz - 1) * (col_nnz - 1); ties by (col, row).
        long best_score = std::numeric_limits<long>::max();
        int best_row = -1, best_col = -1;
        for (int r = 0; r < nrows; ++r) {
            if (e.pivoted_row[r] || e.rows[r].empty()) continue;
            const long rn = static_cast<long>(e.rows[r].size()) - 1;
            for (const auto& [c, v] : e.rows[r]) {
                const long score = rn * (col_count[c] - 1);
                if (score < best_score ||
                    (score == best_score && std::pair(c, r) < std::pair(best_col, best_row))) {
                    best_score = score;
                    best_row = r;
                    best_col = c;
                }
            }
        }
        if (best_row < 0) break;

        e.pivots.emplace_back(best_row, best_col);
        e.pivoted_row[best_row] = true;
        for (const auto& [c, v] : e.rows[best_row]) --col_count[c];
        const Rational pivot = e.rows[best_row].at(best_col);
        for (int r = 0; r < nrows; ++r) {
            if (r == best_row || e.pivoted_row[r]) continue;
            auto hit = e.rows[r].find(best_col);
            if (hit == e.rows[r].end()) continue;
            const Rational factor = hit->second / pivot;
            for (const auto& [c, v] : e.rows[r]) --col_count[c];
            for (const auto& [c, v] : e.rows[best_row]) {
                auto [it, fresh] = e.rows[r].emplace(c, 0);
                it->second -= factor * v;
                if (it->second == 0) e.rows[r].erase(it);
            }
            e.rhs[r] -= factor * e.rhs[best_row];
            Elimination::normalize(e.rows[r], e.rhs[r]);
            for (const auto& [c, v] : e.rows[r]) ++col_count[c];
        }
    }

    for (int r = 0; r < nrows; ++r)
        if (!e.pivoted_row[r] && e.rows[r].empty() && e.rhs[r] != 0) e.consistent = false;
    return e;
}

}  // namespace

SolveOutcome solve_sparse(const SparseSystem& sys) {
    Elimination e = eliminate(sys);
    SolveOutcome out;
    out.consistent = e.consistent;
    out.x.assign(sys.cols(), Rational(0));
    // Back-substitute in reverse pivot order; non-pivot variables stay 0.
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        const auto [r, c] = *it;
        Rational acc = e.rhs[r];
        for (const auto& [cc, v] : e.rows[r])
            if (cc != c) acc -= v * out.x[cc];
        out.x[c] = acc / e.rows[r].at(c);
    }
    if (out.consistent) {
        // exact residual check: the solution must reproduce b
        for (int r = 0; r < sys.rows(); ++r) {
            Rational acc = 0;
            for (const auto& [c, v] : sys.row(r)) acc += v * out.x[c];
            if (acc != sys.rhs(r)) throw std::logic_error("solver produced a wrong solution");
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve(const SparseSystem& sys) {
    SolveOutcome out = solve_sparse(sys);
    if (!out.consistent) return std::nullopt;
    return std::move(out.x);
}

int rank(const SparseSystem& sys) {
    SparseSystem homogeneous(sys.cols());
    for (int r = 0; r < sys.rows(); ++r) homogeneous.add_row(sys.row(r), 0);
    return static_cast<int>(eliminate(homogeneous).pivots.size());
}

}  // namespace kgs
