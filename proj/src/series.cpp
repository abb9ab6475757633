#include "kgs/series.hpp"

#include <algorithm>
#include <iostream>

#include "kgs/canonical.hpp"

namespace kgs {

void GraphSeries::add(const FormalityGraph& g, const Coefficient& c) {
    if (g.ground_count() != sinks_) throw series_error("sink count mismatch");
    if (c.is_zero()) return;
    auto canon = canonical_form(g);
    if (canon.sign == 0) return;
    Coefficient merged = c;
    if (canon.sign < 0) merged = -merged;
    add_canonical(canon.graph, merged);
}

void GraphSeries::add_canonical(const FormalityGraph& canon, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = entries_.emplace(canon, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void GraphSeries::add_series(const GraphSeries& o) {
    if (o.sinks_ != sinks_) throw series_error("sink count mismatch");
    for (const auto& [g, c] : o.entries_) add_canonical(g, c);
}

void GraphSeries::subtract_series(const GraphSeries& o) {
    if (o.sinks_ != sinks_) throw series_error("sink count mismatch");
    for (const auto& [g, c] : o.entries_) add_canonical(g, -c);
}

Coefficient GraphSeries::coefficient(const FormalityGraph& canon) const {
    auto it = entries_.find(canon);
    return it == entries_.end() ? Coefficient() : it->second;
}

int GraphSeries::max_order() const {
    int mx = -1;
    for (const auto& [g, c] : entries_) mx = std::max(mx, g.aerial_count());
    return mx;
}

GraphSeries GraphSeries::order_part(int n) const {
    GraphSeries out(sinks_);
    for (const auto& [g, c] : entries_)
        if (g.aerial_count() == n) out.entries_.emplace(g, c);
    return out;
}

std::map<int, std::size_t> GraphSeries::counts_by_order() const {
    std::map<int, std::size_t> counts;
    for (const auto& [g, c] : entries_) ++counts[g.aerial_count()];
    return counts;
}

GraphSeries GraphSeries::scaled(const Coefficient& c) const {
    GraphSeries out(sinks_);
    if (c.is_zero()) return out;
    for (const auto& [g, q] : entries_) out.add_canonical(g, q * c);
    return out;
}

GraphSeries GraphSeries::affine_part() const {
    GraphSeries out(sinks_);
    for (const auto& [g, c] : entries_)
        if (g.max_aerial_in_degree() <= 1) out.entries_.emplace(g, c);
    return out;
}

std::vector<FormalityGraph> insert_terms(const FormalityGraph& outer, int slot,
                                         const FormalityGraph& inner) {
    if (slot < 0 || slot >= outer.ground_count()) throw series_error("slot out of range");
    const int mo = outer.ground_count(), no = outer.aerial_count();
    const int mi = inner.ground_count(), ni = inner.aerial_count();
    const int m = mo + mi - 1;

    // Label map for the composite: outer sinks keep order around the grafted
    // block of inner sinks; outer aerials come before inner aerials.
    auto outer_label = [&](int v) {
        if (v < slot) return v;
        if (v < mo) return v + mi - 1;       // sinks after the slot, and all outer aerials
        return v + mi - 1;
    };
    auto inner_label = [&](int v) {
        if (v < mi) return slot + v;         // inner sinks occupy the slot block
        return m + no + (v - mi);            // inner aerials after outer aerials
    };

    // Edges of outer that point at the slot, identified by (aerial index, tuple position).
    std::vector<std::pair<int, int>> loose;
    for (int a = 0; a < no; ++a) {
        const auto& t = outer.out_targets(a);
        for (int p = 0; p < static_cast<int>(t.size()); ++p)
            if (t[p] == slot) loose.emplace_back(a, p);
    }

    const int inner_vertices = mi + ni;
    std::vector<FormalityGraph> result;
    std::vector<int> choice(loose.size(), 0);
    while (true) {
        std::vector<std::vector<int>> tuples(no + ni);
        for (int a = 0; a < no; ++a) {
            std::vector<int> t;
            t.reserve(outer.out_targets(a).size());
            for (int w : outer.out_targets(a)) t.push_back(w == slot ? -1 : outer_label(w));
            tuples[a] = std::move(t);
        }
        for (std::size_t e = 0; e < loose.size(); ++e)
            tuples[loose[e].first][loose[e].second] = inner_label(choice[e]);
        for (int a = 0; a < ni; ++a) {
            std::vector<int> t;
            t.reserve(inner.out_targets(a).size());
            for (int w : inner.out_targets(a)) t.push_back(inner_label(w));
            tuples[no + a] = std::move(t);
        }
        result.emplace_back(m, std::move(tuples));

        // next redistribution
        std::size_t e = 0;
        for (; e < loose.size(); ++e) {
            if (++choice[e] < inner_vertices) break;
            choice[e] = 0;
        }
        if (e == loose.size()) break;
        if (loose.empty()) break;
    }
    return result;
}

GraphSeries insert(const FormalityGraph& outer, int slot, const FormalityGraph& inner) {
    GraphSeries out(outer.ground_count() + inner.ground_count() - 1);
    for (const auto& g : insert_terms(outer, slot, inner)) out.add(g, Coefficient(1));
    return out;
}

GraphSeries associator(const GraphSeries& star, int max_order, bool affine) {
    if (star.sinks() != 2) throw series_error("associator needs a 2-sink series");
    if (star.max_order() < max_order) throw series_error("insufficient star order");

    std::vector<GraphSeries> by_order;
    for (int n = 0; n <= max_order; ++n) by_order.push_back(star.order_part(n));

    GraphSeries assoc(3);
    for (int a = 0; a <= max_order; ++a)
        for (int b = 0; a + b <= max_order; ++b) {
            const auto& outer = by_order[a];
            const auto& inner = by_order[b];
            for (const auto& [go, co] : outer.entries())
                for (const auto& [gi, ci] : inner.entries()) {
                    Coefficient weight = co * ci;
                    GraphSeries left = insert(go, 0, gi);    // (f*g)*h
                    GraphSeries right = insert(go, 1, gi);   // f*(g*h)
                    if (affine) {
                        left = left.affine_part();
                        right = right.affine_part();
                    }
                    assoc.add_series(left.scaled(weight));
                    assoc.add_series(right.scaled(-weight));
                }
        }
    return assoc;
}

std::vector<TriDiffComponent> split_by_tridiff(const GraphSeries& s, int n) {
    std::map<std::vector<int>, TriDiffComponent> by_profile;
    for (const auto& [g, c] : s.entries()) {
        if (g.aerial_count() != n) continue;
        auto profile = tri_differential_order(g);
        auto it = by_profile.find(profile);
        if (it == by_profile.end())
            it = by_profile.emplace(profile, TriDiffComponent{profile, n, GraphSeries(s.sinks())})
                     .first;
        it->second.combination.add_canonical(g, c);
    }
    std::vector<TriDiffComponent> out;
    out.reserve(by_profile.size());
    for (auto& [profile, comp] : by_profile) out.push_back(std::move(comp));
    return out;
}

GraphSeries slice_series(const GraphSeries& s, unsigned exponent) {
    GraphSeries out(s.sinks());
    for (const auto& [g, c] : s.entries()) out.add_canonical(g, Coefficient(c.slice(exponent)));
    return out;
}

void warn_on_unexpected_z(const GraphSeries& s, const char* context) {
    for (const auto& [g, c] : s.entries())
        if (g.aerial_count() <= 7 && c.degree() >= 2) {
            std::cerr << "warning: z^2 coefficient at order " << g.aerial_count() << " in "
                      << context << " (" << encode_graph(g) << "; " << c.to_string() << ")\n";
            return;
        }
}

}  // namespace kgs
