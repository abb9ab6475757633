#ifndef KGS_STAR_IO_HPP
#define KGS_STAR_IO_HPP

#include <iosfwd>
#include <string>

#include "kgs/series.hpp"

namespace kgs {

enum class Normalization { weights, operator_form };

/// A loaded graph-series file together with the highest hbar order it holds.
struct StarProduct {
    GraphSeries series{2};
    int max_order = -1;
};

/// Reads a series file: header `format kgs-star v1; normalization={weights|operator}`
/// then one term per line, `<hbar-order>; <m> <n>; <targets>; <coefficient>`
/// (the explicit hbar-order field is optional; it must equal the aerial count
/// when present).  Under `normalization=weights` each order-n coefficient is
/// divided by n! on ingestion, so the stored series is always in operator
/// normalization.  A missing header is accepted and read as operator form.
StarProduct read_series(std::istream& in, int expected_sinks);

/// read_series plus star-product validation: the order-0 term must be the
/// bare product (edgeless graph, coefficient 1), order 1 must contain the
/// wedge, and every graph must be a Kontsevich graph.  In affine mode graphs
/// with aerial in-degree >= 2 are dropped on ingestion.
StarProduct load_star_product(std::istream& in, bool affine = false);

void write_series(std::ostream& out, const GraphSeries& series);

StarProduct read_series_file(const std::string& path, int expected_sinks);
StarProduct load_star_product_file(const std::string& path, bool affine = false);
void write_series_file(const std::string& path, const GraphSeries& series);

}  // namespace kgs

#endif
