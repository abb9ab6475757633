#include "kgs/star_solver.hpp"

#include <set>

#include "kgs/generate.hpp"
#include "kgs/leibniz.hpp"
#include "kgs/sparse_solver.hpp"

namespace kgs {

namespace {

// Order-k associator part coming from the already-known orders (both factors
// of every insertion below order k).
GraphSeries known_associator_part(const GraphSeries& star, int k, bool affine) {
    GraphSeries out(3);
    for (int a = 1; a < k; ++a) {
        int b = k - a;
        if (b < 1 || b >= k) continue;
        const GraphSeries outer = star.order_part(a);
        const GraphSeries inner = star.order_part(b);
        for (const auto& [go, co] : outer.entries())
            for (const auto& [gi, ci] : inner.entries()) {
                Coefficient weight = co * ci;
                GraphSeries left = insert(go, 0, gi);
                GraphSeries right = insert(go, 1, gi);
                if (affine) {
                    left = left.affine_part();
                    right = right.affine_part();
                }
                out.add_series(left.scaled(weight));
                out.add_series(right.scaled(-weight));
            }
    }
    return out;
}

// Linear coefficient of an order-k candidate graph in the order-k associator:
// its compositions with the bare product.
GraphSeries candidate_contribution(const FormalityGraph& candidate, bool affine) {
    const FormalityGraph unit(2, {});
    GraphSeries out(3);
    GraphSeries pieces[4] = {insert(candidate, 0, unit), insert(unit, 0, candidate),
                             insert(candidate, 1, unit), insert(unit, 1, candidate)};
    int signs[4] = {1, 1, -1, -1};
    for (int i = 0; i < 4; ++i) {
        GraphSeries piece = affine ? pieces[i].affine_part() : pieces[i];
        out.add_series(piece.scaled(Coefficient(signs[i])));
    }
    return out;
}

}  // namespace

StarOrderSolution solve_star_order(const GraphSeries& star, int k, Mode mode) {
    if (k < 1) throw series_error("solve_star_order needs k >= 1");
    const bool affine = (mode == Mode::affine);
    const FormalityGraph unit(2, {});
    if (!(star.coefficient(unit) == Coefficient(1)))
        throw series_error("star product must contain the unit term");

    std::optional<int> cap;
    if (affine) cap = 1;
    const auto candidates = generate_kontsevich_graphs(2, k, cap);
    const auto pool = (k >= 2) ? generate_leibniz_graphs(3, k - 1, {.nonzero = true, .affine = affine})
                               : std::vector<FormalityGraph>{};

    const GraphSeries known = known_associator_part(star, k, affine);

    std::vector<GraphSeries> contributions;
    contributions.reserve(candidates.size());
    for (const auto& g : candidates) contributions.push_back(candidate_contribution(g, affine));
    std::vector<GraphSeries> expansions;
    expansions.reserve(pool.size());
    for (const auto& L : pool) expansions.push_back(expand_leibniz(L, affine));

    // Row space: every canonical order-k Kontsevich graph on 3 sinks in sight.
    std::map<FormalityGraph, int> row_of;
    auto note_rows = [&](const GraphSeries& s) {
        for (const auto& [g, c] : s.entries()) row_of.emplace(g, 0);
    };
    note_rows(known);
    for (const auto& s : contributions) note_rows(s);
    for (const auto& s : expansions) note_rows(s);
    int idx = 0;
    for (auto& [g, r] : row_of) r = idx++;

    std::set<unsigned> exponent_set;
    for (const auto& [g, c] : known.entries())
        for (const auto& [e, r] : c.terms()) exponent_set.insert(e);
    if (exponent_set.empty()) exponent_set.insert(0);

    const int ncand = static_cast<int>(candidates.size());
    const int ncols = ncand + static_cast<int>(pool.size());
    std::vector<std::map<int, Rational>> rows(row_of.size());
    for (int j = 0; j < ncand; ++j)
        for (const auto& [g, c] : contributions[j].entries()) rows[row_of.at(g)][j] = c.slice(0);
    for (int j = 0; j < static_cast<int>(pool.size()); ++j)
        for (const auto& [g, c] : expansions[j].entries())
            rows[row_of.at(g)][ncand + j] = -c.slice(0);

    StarOrderSolution result;
    result.star = star;
    for (unsigned e : exponent_set) {
        SparseSystem sys(ncols);
        for (const auto& [g, r] : row_of) sys.add_row(rows[r], -known.coefficient(g).slice(e));
        auto solution = solve(sys);
        if (!solution)
            throw series_error("order-" + std::to_string(k) +
                               " extension is infeasible; this signals a bug, solutions exist");
        for (int j = 0; j < ncand; ++j)
            result.star.add_canonical(candidates[j], Coefficient::z_term((*solution)[j], e));
    }

    if (k == 1 && result.star.coefficient(FormalityGraph(2, {{0, 1}})).is_zero())
        result.star.add_canonical(FormalityGraph(2, {{0, 1}}), Coefficient(1));

    FactorizeOptions options;
    options.mode = mode;
    result.factorization = factorize_series(associator(result.star, k, affine), k, options);
    return result;
}

}  // namespace kgs
