#ifndef KGS_FACTORIZE_HPP
#define KGS_FACTORIZE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kgs/series.hpp"

namespace kgs {

enum class Mode { full, affine };

/// Which z-slice of a component to factorize: one slice alone (the Leibniz
/// pool then comes from that slice's own graphs) or the merged component
/// (pool from the union of slice supports, each slice solved over Q).
enum class SlicePolicy { rational = 0, zeta = 1, merged = 2 };

/// One generation of the contract-expand iteration.
struct Layer {
    int index = 0;
    std::vector<FormalityGraph> leibniz_set;          // new Leibniz graphs of this layer
    std::vector<FormalityGraph> kontsevich_frontier;  // new Kontsevich graphs its expansion adds
};

/// Weak factorization certificate for one homogeneous component: a Leibniz
/// combination that expands exactly to the target.
struct Certificate {
    std::vector<int> order;  // sink in-degree profile
    int hbar_order = 0;
    std::vector<std::pair<FormalityGraph, Coefficient>> terms;
    std::string log;  // layer search trace, appendix format
    bool status = false;
};

struct FactorizeOptions {
    Mode mode = Mode::full;
    int max_layers = 3;
    SlicePolicy slice = SlicePolicy::merged;
    int jobs = 1;
};

/// Solves sum_L c_L expand(L) = target over the canonical Kontsevich graph
/// basis against a fixed pool, each z-slice independently over Q with
/// deterministic pivoting; status False when inconsistent.
Certificate factorize_component(const TriDiffComponent& target,
                                const std::vector<FormalityGraph>& leibniz_pool,
                                Mode mode = Mode::full);

/// Iterated contract-expand: layer 0 contracts the target's graphs; each
/// expansion's new Kontsevich graphs are contracted to form the next layer;
/// stops at factorization success, saturation, or max_layers.  Returns the
/// layers and the trace `{a}K -> +{b}L -> +{c}K ...` + `True|False`.
std::pair<std::vector<Layer>, std::string> layer_closure(const TriDiffComponent& target,
                                                         int max_layers, Mode mode);

struct SeriesFactorization {
    // keyed by (hbar order, profile); deterministic iteration
    std::map<std::pair<int, std::vector<int>>, Certificate> certificates;
    std::string log;  // appendix-format blocks per hbar order
    bool all_true = true;
};

/// Splits the series by order and sink in-degree profile and factorizes every
/// component through layered Leibniz graphs, emitting the appendix-format log.
SeriesFactorization factorize_series(const GraphSeries& assoc, int max_order,
                                     const FactorizeOptions& options = {});

struct ReduceResult {
    GraphSeries reduced{2};
    bool status = false;
    /// The Leibniz combinations that realized the removed slice, per component.
    std::map<std::pair<int, std::vector<int>>, Certificate> remainder;
    std::string log;
    /// On failure: the part of the slice the pool could not reach.
    GraphSeries residual{2};
};

/// Subtracts z^slice_exponent times the slice of the series entirely when
/// every component of that slice factors through Leibniz graphs (so the
/// result equals the input modulo differential consequences of the Jacobi
/// identity); status False with a residual otherwise.
ReduceResult reduce_series(const GraphSeries& star, unsigned slice_exponent,
                           const FactorizeOptions& options = {});

// Certificate file I/O (format kgs-cert v1).
void write_certificate(std::ostream& out, const Certificate& cert);
Certificate read_certificate(std::istream& in);

}  // namespace kgs

#endif
