#ifndef KGS_STAR_SOLVER_HPP
#define KGS_STAR_SOLVER_HPP

#include "kgs/factorize.hpp"
#include "kgs/series.hpp"

namespace kgs {

struct StarOrderSolution {
    GraphSeries star{2};                // extended through order k
    SeriesFactorization factorization;  // certificates for the order-k associator
};

/// Extends a star product by one hbar order: introduces an unknown
/// coefficient for every admissible Kontsevich graph at order k, forms the
/// order-k associator (affine-linear in the unknowns) and solves jointly for
/// graph coefficients plus Leibniz coefficients so that every homogeneous
/// component factors through Leibniz graphs.  Deterministic pivoting picks
/// one solution; the result is associative mod o(hbar^k) but not necessarily
/// the Kontsevich star product.  At k=1 the wedge coefficient is a free gauge
/// parameter and is normalized to 1 (it is the Poisson bracket).
StarOrderSolution solve_star_order(const GraphSeries& star, int k, Mode mode = Mode::full);

}  // namespace kgs

#endif
