#ifndef KGS_LEIBNIZ_HPP
#define KGS_LEIBNIZ_HPP

#include <vector>

#include "kgs/series.hpp"

namespace kgs {

/// Raw expansion of the trident into wedge pairs: the Jacobiator splits into
/// its 3 cyclic wedge-over-wedge terms, and each edge formerly entering the
/// trident lands on one of the two new aerial vertices (Leibniz rule), giving
/// 3 * 2^q graphs with coefficient +1 each (q = trident in-degree).  The
/// internal edge occupies the second slot of the lower wedge, so that the
/// motif for trident targets (a,b,c) reads P^{il} d_l P^{jk} with i->a, j->b,
/// k->c, matching the Jacobiator component formula term by term.
std::vector<FormalityGraph> expand_leibniz_terms(const FormalityGraph& L);

/// Canonicalized, merged expansion into Kontsevich graphs.  In affine mode
/// graphs with aerial in-degree >= 2 are dropped.
GraphSeries expand_leibniz(const FormalityGraph& L, bool affine = false);

/// All admissible Leibniz graphs obtained by contracting one aerial-to-aerial
/// edge of a Kontsevich graph: the endpoints merge into a trident inheriting
/// the remaining three out-edges.  Results that are not admissible (repeated
/// trident targets, tadpoles, double edges) or that are zero graphs are
/// discarded; canonical, deduplicated, sorted.  In affine mode the degree
/// bounds (trident in-degree <= 2, wedges <= 1) are enforced.
std::vector<FormalityGraph> contract_edges(const FormalityGraph& K, bool affine = false);

}  // namespace kgs

#endif
