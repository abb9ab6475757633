#include "kgs/leibniz.hpp"

#include <algorithm>
#include <set>

#include "kgs/canonical.hpp"

namespace kgs {

std::vector<FormalityGraph> expand_leibniz_terms(const FormalityGraph& L) {
    const int t = L.trident_index();
    if (t < 0) throw graph_error("expansion needs a trident vertex");
    const int m = L.ground_count();
    const int n = L.aerial_count();
    const int lower = m + t;      // reuses the trident label
    const int upper = m + n;      // fresh aerial vertex
    const auto& targets = L.out_targets(t);

    // Edges entering the trident, as (aerial source index, tuple slot).
    std::vector<std::pair<int, int>> entering;
    for (int a = 0; a < n; ++a) {
        const auto& tup = L.out_targets(a);
        for (int p = 0; p < static_cast<int>(tup.size()); ++p)
            if (tup[p] == lower) entering.emplace_back(a, p);
    }

    std::vector<FormalityGraph> result;
    result.reserve(3u << entering.size());
    for (int r = 0; r < 3; ++r) {
        const int ta = targets[r % 3], tb = targets[(r + 1) % 3], tc = targets[(r + 2) % 3];
        for (unsigned mask = 0; mask < (1u << entering.size()); ++mask) {
            std::vector<std::vector<int>> tuples(n + 1);
            for (int a = 0; a < n; ++a)
                if (a != t) tuples[a] = L.out_targets(a);
            tuples[t] = {ta, upper};
            tuples[n] = {tb, tc};
            for (std::size_t e = 0; e < entering.size(); ++e)
                if (mask & (1u << e)) tuples[entering[e].first][entering[e].second] = upper;
            result.emplace_back(m, std::move(tuples));
        }
    }
    return result;
}

GraphSeries expand_leibniz(const FormalityGraph& L, bool affine) {
    GraphSeries out(L.ground_count());
    for (const auto& g : expand_leibniz_terms(L)) {
        if (affine && g.max_aerial_in_degree() > 1) continue;
        out.add(g, Coefficient(1));
    }
    return out;
}

std::vector<FormalityGraph> contract_edges(const FormalityGraph& K, bool affine) {
    if (!K.is_kontsevich()) throw graph_error("contraction expects a Kontsevich graph");
    const int m = K.ground_count();
    const int n = K.aerial_count();

    std::set<FormalityGraph> seen;
    for (int a = 0; a < n; ++a) {
        for (int w : K.out_targets(a)) {
            if (w < m) continue;  // only aerial-to-aerial edges contract
            const int b = w - m;  // aerial index of the edge head
            // Merge vertex m+b into m+a; the merged vertex keeps label m+a and
            // inherits a's other target plus b's two targets.
            std::vector<int> merged;
            for (int x : K.out_targets(a))
                if (x != w) merged.push_back(x);
            for (int x : K.out_targets(b)) merged.push_back(x);

            auto relabel = [&](int v) {
                if (v == m + b) return m + a;
                return v > m + b ? v - 1 : v;
            };
            bool ok = true;
            std::vector<std::vector<int>> tuples(n - 1);
            std::vector<int> trident;
            for (int x : merged) {
                int y = relabel(x);
                if (y == relabel(m + a)) ok = false;  // tadpole at the merged vertex
                trident.push_back(y);
            }
            std::sort(trident.begin(), trident.end());
            if (std::adjacent_find(trident.begin(), trident.end()) != trident.end()) ok = false;
            if (!ok) continue;

            for (int c = 0; c < n && ok; ++c) {
                if (c == b) continue;
                std::vector<int> t;
                for (int x : K.out_targets(c)) {
                    if (c == a && x == w) continue;  // handled by the merge
                    t.push_back(relabel(x));
                }
                int pos = c > b ? c - 1 : c;
                if (c == a)
                    tuples[pos] = trident;
                else {
                    // a double edge forms when c pointed at both endpoints
                    std::vector<int> sorted = t;
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ok = false;
                    if (std::find(t.begin(), t.end(), relabel(m + c)) != t.end()) ok = false;
                    tuples[pos] = std::move(t);
                }
            }
            if (!ok) continue;

            FormalityGraph L(m, std::move(tuples));
            if (affine) {
                auto deg = L.in_degrees();
                bool within = true;
                for (int c = 0; c < L.aerial_count(); ++c) {
                    int cap = (c == L.trident_index()) ? 2 : 1;
                    if (deg[m + c] > cap) within = false;
                }
                if (!within) continue;
            }
            auto canon = canonical_form(L);
            if (canon.sign == 0) continue;
            seen.insert(std::move(canon.graph));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace kgs
