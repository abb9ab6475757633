#ifndef KGS_CANONICAL_HPP
#define KGS_CANONICAL_HPP

#include "kgs/graph.hpp"

namespace kgs {

/// Canonical representative of a graph together with the sign relating the
/// input operator to the canonical one: operator(g) = sign * operator(canonical).
/// sign == 0 exactly when the graph admits an automorphism of odd induced
/// tuple-swap parity (a zero graph, whose operator coefficient is forced to 0).
struct SignedCanonical {
    FormalityGraph graph;
    int sign;  // -1, 0, +1
};

/// Canonical labeling of the colored digraph: every sink is individually
/// color-fixed, the trident (if any) forms its own color class ordered before
/// the wedge class, so a canonical Leibniz graph has the trident as its first
/// aerial vertex.  Labels are found by color refinement plus backtracking;
/// among the reachable labelings the lexicographically minimal sorted-tuple
/// encoding wins, and out-tuple sorting parities are accumulated into the sign.
SignedCanonical canonical_form(const FormalityGraph& g);

inline bool is_zero_graph(const FormalityGraph& g) { return canonical_form(g).sign == 0; }

}  // namespace kgs

#endif
