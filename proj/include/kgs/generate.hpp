#ifndef KGS_GENERATE_HPP
#define KGS_GENERATE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "kgs/graph.hpp"

namespace kgs {

/// All pairwise non-isomorphic nonzero Kontsevich graphs with the given
/// numbers of sinks and aerial vertices (every aerial vertex of out-degree 2,
/// simple, no tadpoles), in canonical form, sorted.  With in_degree_cap set,
/// only graphs whose aerial in-degrees stay within the cap are kept (cap 1 is
/// the affine filter).
std::vector<FormalityGraph> generate_kontsevich_graphs(int sinks, int aerial,
                                                       std::optional<int> in_degree_cap = {});

struct LeibnizFilters {
    bool nonzero = false;
    bool all_sinks_hit = false;  // every sink has in-degree >= 1
    bool affine = false;         // trident in-degree <= 2, wedge in-degree <= 1
};

/// Counts per filter stage (cumulative, as in the generation tables):
/// generated -> nonzero -> nonzero with every sink hit.
struct LeibnizCounts {
    std::size_t generated = 0;
    std::size_t nonzero = 0;
    std::size_t all_sinks_hit = 0;
};

/// All admissible Leibniz graphs (one trident with three distinct targets,
/// aerial-1 wedges, simple, no tadpoles) in canonical form, sorted, with the
/// requested filters applied.  When counts is non-null it receives the stage
/// counts within the requested affine setting.
std::vector<FormalityGraph> generate_leibniz_graphs(int sinks, int aerial,
                                                    const LeibnizFilters& filters = {},
                                                    LeibnizCounts* counts = nullptr);

}  // namespace kgs

#endif
