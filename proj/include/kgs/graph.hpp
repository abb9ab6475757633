#ifndef KGS_GRAPH_HPP
#define KGS_GRAPH_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "kgs/rational.hpp"

namespace kgs {

/// Directed graph on m ordered ground vertices (sinks, labels 0..m-1) and
/// n aerial vertices (labels m..m+n-1).  Each aerial vertex carries an
/// ordered out-edge tuple: 2 targets for a wedge, 3 for the single trident
/// allowed in a Leibniz graph.  Tuple order is data (it carries the sign of
/// the associated operator), not an artifact of storage.
///
/// Structural invariants enforced on construction: simple digraph (no
/// repeated target within a tuple, hence no double edges), no tadpoles,
/// at most one trident, trident targets pairwise distinct.
class FormalityGraph {
public:
    FormalityGraph(int ground_count, std::vector<std::vector<int>> out_edges);

    int ground_count() const { return ground_count_; }  // m
    int aerial_count() const { return static_cast<int>(out_edges_.size()); }  // n
    int vertex_count() const { return ground_count_ + aerial_count(); }

    /// Out-edge tuple of the aerial vertex with label ground_count()+index.
    const std::vector<int>& out_targets(int aerial_index) const { return out_edges_[aerial_index]; }
    const std::vector<std::vector<int>>& out_edges() const { return out_edges_; }

    /// Aerial index of the trident (out-degree-3) vertex, or -1 if none.
    int trident_index() const;
    bool has_trident() const { return trident_index() >= 0; }
    bool is_kontsevich() const { return !has_trident(); }

    int edge_count() const;
    std::vector<int> in_degrees() const;  // indexed by vertex label
    int max_aerial_in_degree() const;

    friend bool operator==(const FormalityGraph&, const FormalityGraph&) = default;
    friend std::strong_ordering operator<=>(const FormalityGraph& a, const FormalityGraph& b);

    /// Compact byte key, usable as a hash-map key.
    std::string key() const;

private:
    int ground_count_;
    std::vector<std::vector<int>> out_edges_;
};

/// Parses the one-line encoding `<m> <n>; t1 t2 [t3] ...` (tuples flat, in
/// aerial-vertex order; a 3-tuple marks the trident).  When the token stream
/// admits several trident placements, the placement whose trident tuple is
/// sorted ascending wins, leftmost first; graphs written by encode_graph
/// always round-trip.
FormalityGraph parse_graph(std::string_view line);

std::string encode_graph(const FormalityGraph& g);

/// Sink in-degree profile (d_0, ..., d_{m-1}).
std::vector<int> tri_differential_order(const FormalityGraph& g);

}  // namespace kgs

#endif
