#ifndef KGS_SERIES_HPP
#define KGS_SERIES_HPP

#include <map>
#include <vector>

#include "kgs/coefficient.hpp"
#include "kgs/graph.hpp"

namespace kgs {

class series_error : public std::runtime_error {
public:
    explicit series_error(const std::string& what) : std::runtime_error(what) {}
};

/// Finite sum of canonical graphs with Q[z] coefficients, graded by the
/// aerial-vertex count (the hbar order).  Graphs are stored in canonical form
/// with the canonicalization sign absorbed into the coefficient; sign-0
/// (zero) graphs and zero coefficients are never stored.  The stored
/// coefficient is the full operator coefficient (any 1/n! from a weight
/// convention is already merged in).
class GraphSeries {
public:
    explicit GraphSeries(int sinks) : sinks_(sinks) {}

    int sinks() const { return sinks_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<FormalityGraph, Coefficient>& entries() const { return entries_; }

    /// Canonicalizes g, absorbs the sign, merges.
    void add(const FormalityGraph& g, const Coefficient& c);
    /// Fast path when g is already canonical with sign +1.
    void add_canonical(const FormalityGraph& canon, const Coefficient& c);

    void add_series(const GraphSeries& o);
    void subtract_series(const GraphSeries& o);

    Coefficient coefficient(const FormalityGraph& canon) const;

    int max_order() const;
    GraphSeries order_part(int n) const;
    std::map<int, std::size_t> counts_by_order() const;
    GraphSeries scaled(const Coefficient& c) const;
    /// Drops graphs with any aerial in-degree >= 2 (they vanish on affine
    /// Poisson structures).
    GraphSeries affine_part() const;

    friend bool operator==(const GraphSeries&, const GraphSeries&) = default;

private:
    int sinks_;
    std::map<FormalityGraph, Coefficient> entries_;
};

/// All Leibniz-rule redistributions of grafting `inner` into ground vertex
/// `slot` of `outer`: each edge formerly targeting the slot lands on one
/// vertex of `inner`.  Raw composite graphs, one per redistribution, before
/// canonicalization; (vertex count of inner)^(in-degree of slot) terms.
std::vector<FormalityGraph> insert_terms(const FormalityGraph& outer, int slot,
                                         const FormalityGraph& inner);

/// Canonicalized, merged sum of the redistributions with coefficient +1 each;
/// non-simple composites are dropped.
GraphSeries insert(const FormalityGraph& outer, int slot, const FormalityGraph& inner);

/// Associator (f*g)*h - f*(g*h) of a 2-sink series, truncated to total order
/// <= max_order.  In affine mode graphs with aerial in-degree >= 2 are
/// dropped from the result.
GraphSeries associator(const GraphSeries& star, int max_order, bool affine = false);

/// One homogeneous multi-differential component: all graphs share the sink
/// in-degree profile `order` and the aerial count `hbar_order`.
struct TriDiffComponent {
    std::vector<int> order;
    int hbar_order = 0;
    GraphSeries combination{3};
};

/// Partition of the order-n part by sink in-degree profile; empty components
/// omitted; sorted by profile.
std::vector<TriDiffComponent> split_by_tridiff(const GraphSeries& s, int n);

/// Entrywise coefficient slice at the given z-exponent; zero entries dropped.
GraphSeries slice_series(const GraphSeries& s, unsigned exponent);

/// Warns (once per call, on stderr) if any coefficient at order <= 7 carries
/// a z^2 term; the known weight tables never produce one.
void warn_on_unexpected_z(const GraphSeries& s, const char* context);

}  // namespace kgs

#endif
