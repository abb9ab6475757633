#ifndef KGS_EVALUATE_HPP
#define KGS_EVALUATE_HPP

#include <map>
#include <utility>
#include <vector>

#include "kgs/bivector.hpp"
#include "kgs/graph.hpp"
#include "kgs/series.hpp"

namespace kgs {

/// The multidifferential operator of the graph applied to polynomial data:
/// sum over all edge-index assignments of the product of differentiated
/// vertex contents.  Ground vertex k holds args[k]; a wedge holds the P
/// component selected by its ordered out-edges; the trident holds the
/// Jacobiator component.  Each content is differentiated by the indices of
/// the incoming edges.
Polynomial evaluate_graph(const FormalityGraph& g, const PolyBivector& P,
                          const std::vector<Polynomial>& args);

/// Entrywise evaluation of a graph series, keyed by (hbar order, z exponent).
using SeriesValue = std::map<std::pair<int, unsigned>, Polynomial>;
SeriesValue evaluate_series(const GraphSeries& s, const PolyBivector& P,
                            const std::vector<Polynomial>& args);

/// evaluate_series with z substituted by a rational value; keyed by hbar order.
std::map<int, Polynomial> evaluate_series_at_z(const GraphSeries& s, const PolyBivector& P,
                                               const std::vector<Polynomial>& args,
                                               const Rational& z_value);

}  // namespace kgs

#include "kgs/factorize.hpp"

namespace kgs {

struct CertificateCheck {
    bool structural = false;         // expansion reproduces the target exactly
    bool semantic = false;           // evaluated equality on non-Poisson samples
    bool poisson_vanishing = false;  // target evaluates to 0 on Poisson samples
    std::string failure;             // which check failed first, if any
    bool ok() const { return structural && semantic && poisson_vanishing; }
};

/// Three-way certificate validation, independent of the solver:
/// (a) structural re-expansion, (b) operator equality of both sides on each
/// non-Poisson sample, (c) vanishing of the target on each Poisson sample.
/// In affine mode the structural comparison applies the affine filter and the
/// samples are expected to be affine bivectors.
CertificateCheck check_certificate(const Certificate& cert, const TriDiffComponent& target,
                                   const std::vector<PolyBivector>& poisson_samples,
                                   const std::vector<PolyBivector>& nonpoisson_samples,
                                   const std::vector<std::vector<Polynomial>>& arg_samples,
                                   Mode mode = Mode::full);

}  // namespace kgs

#endif
