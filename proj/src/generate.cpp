#include "kgs/generate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "kgs/canonical.hpp"

namespace kgs {

namespace {

// Enumerates, for one aerial vertex, all ascending target tuples of the given
// width avoiding the vertex itself.
void tuple_choices(int total, int self, int width, std::vector<std::vector<int>>& out) {
    std::vector<int> tuple(width);
    auto rec = [&](auto&& rec, int pos, int from) -> void {
        if (pos == width) {
            out.push_back(tuple);
            return;
        }
        for (int v = from; v < total; ++v) {
            if (v == self) continue;
            tuple[pos] = v;
            rec(rec, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

bool within_caps(const FormalityGraph& g, int trident_cap, int wedge_cap) {
    auto deg = g.in_degrees();
    const int trident = g.trident_index();
    for (int a = 0; a < g.aerial_count(); ++a) {
        int cap = (a == trident) ? trident_cap : wedge_cap;
        if (deg[g.ground_count() + a] > cap) return false;
    }
    return true;
}

}  // namespace

std::vector<FormalityGraph> generate_kontsevich_graphs(int sinks, int aerial,
                                                       std::optional<int> in_degree_cap) {
    const int total = sinks + aerial;
    std::vector<std::vector<std::vector<int>>> choices(aerial);
    for (int a = 0; a < aerial; ++a) tuple_choices(total, sinks + a, 2, choices[a]);

    std::map<FormalityGraph, int> seen;  // canonical graph -> sign (nonzero only)
    std::vector<std::vector<int>> tuples(aerial);
    auto rec = [&](auto&& rec, int a) -> void {
        if (a == aerial) {
            FormalityGraph g(sinks, tuples);
            if (in_degree_cap && g.max_aerial_in_degree() > *in_degree_cap) return;
            auto canon = canonical_form(g);
            if (canon.sign == 0) return;
            seen.emplace(std::move(canon.graph), canon.sign);
            return;
        }
        for (const auto& t : choices[a]) {
            tuples[a] = t;
            rec(rec, a + 1);
        }
    };
    rec(rec, 0);

    std::vector<FormalityGraph> result;
    result.reserve(seen.size());
    for (auto& [g, s] : seen) result.push_back(g);
    return result;
}

std::vector<FormalityGraph> generate_leibniz_graphs(int sinks, int aerial,
                                                    const LeibnizFilters& filters,
                                                    LeibnizCounts* counts) {
    if (aerial < 1) throw graph_error("a Leibniz graph needs at least the trident vertex");
    const int total = sinks + aerial;
    // Trident fixed as the first aerial vertex; canonical dedup absorbs the choice.
    std::vector<std::vector<std::vector<int>>> choices(aerial);
    tuple_choices(total, sinks, 3, choices[0]);
    for (int a = 1; a < aerial; ++a) tuple_choices(total, sinks + a, 2, choices[a]);

    LeibnizCounts stage;
    std::map<FormalityGraph, bool> seen;  // canonical graph -> nonzero?
    std::vector<std::vector<int>> tuples(aerial);
    auto rec = [&](auto&& rec, int a) -> void {
        if (a == aerial) {
            FormalityGraph g(sinks, tuples);
            if (filters.affine && !within_caps(g, 2, 1)) return;
            auto canon = canonical_form(g);
            auto [it, fresh] = seen.emplace(std::move(canon.graph), canon.sign != 0);
            if (!fresh) return;
            ++stage.generated;
            if (!it->second) return;
            ++stage.nonzero;
            auto profile = tri_differential_order(it->first);
            if (std::all_of(profile.begin(), profile.end(), [](int d) { return d >= 1; }))
                ++stage.all_sinks_hit;
            return;
        }
        for (const auto& t : choices[a]) {
            tuples[a] = t;
            rec(rec, a + 1);
        }
    };
    rec(rec, 0);

    if (counts) *counts = stage;

    std::vector<FormalityGraph> result;
    for (const auto& [g, nonzero] : seen) {
        if (filters.nonzero && !nonzero) continue;
        if (filters.all_sinks_hit) {
            if (!nonzero) continue;
            auto profile = tri_differential_order(g);
            if (!std::all_of(profile.begin(), profile.end(), [](int d) { return d >= 1; })) continue;
        }
        result.push_back(g);
    }
    return result;
}

}  // namespace kgs
