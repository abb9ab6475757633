#include "kgs/canonical.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace kgs {

namespace {

// Individualization-refinement search over ordered partitions.  Cells are
// kept in a stable order: splitting replaces a cell in place by its
// sub-cells sorted by signature, which keeps the partition sequence
// isomorphism-invariant; hence the set of leaf labelings is closed under
// automorphisms and the minimal leaf is a true canonical form.
struct CanonicalSearch {
    int total;                                  // m + n
    int ground;                                 // m
    const FormalityGraph* input;
    std::vector<std::vector<int>> out_adj;      // per vertex, sorted targets
    std::vector<std::vector<int>> in_adj;       // per vertex, sorted sources

    std::vector<int> best_encoding;             // flattened sorted tuples under best labeling
    std::vector<std::vector<int>> best_tuples;  // the canonical out-edge tuples
    bool best_valid = false;
    bool parity_plus = false, parity_minus = false;

    explicit CanonicalSearch(const FormalityGraph& g) : total(g.vertex_count()), ground(g.ground_count()), input(&g) {
        out_adj.assign(total, {});
        in_adj.assign(total, {});
        for (int a = 0; a < g.aerial_count(); ++a) {
            int v = ground + a;
            for (int t : g.out_targets(a)) {
                out_adj[v].push_back(t);
                in_adj[t].push_back(v);
            }
        }
        for (auto& l : out_adj) std::sort(l.begin(), l.end());
        for (auto& l : in_adj) std::sort(l.begin(), l.end());
    }

    using Partition = std::vector<std::vector<int>>;

    // Equitable refinement: split cells by per-cell out/in edge counts.
    void refine(Partition& cells) const {
        bool changed = true;
        std::vector<int> cell_of(total);
        while (changed) {
            changed = false;
            for (int c = 0; c < static_cast<int>(cells.size()); ++c)
                for (int v : cells[c]) cell_of[v] = c;
            Partition next;
            next.reserve(cells.size());
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // signature = counts of out/in edges into every current cell
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(2 * cells.size(), 0);
                    for (int t : out_adj[v]) ++sig[2 * cell_of[t]];
                    for (int s : in_adj[v]) ++sig[2 * cell_of[s] + 1];
                    sigs.emplace_back(std::move(sig), v);
                }
                std::stable_sort(sigs.begin(), sigs.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<int> sub{sigs[0].second};
                for (std::size_t i = 1; i < sigs.size(); ++i) {
                    if (sigs[i].first != sigs[i - 1].first) {
                        next.push_back(std::move(sub));
                        sub.clear();
                        changed = true;
                    }
                    sub.push_back(sigs[i].second);
                }
                next.push_back(std::move(sub));
            }
            cells = std::move(next);
        }
    }

    void search(Partition cells) {
        refine(cells);
        int branch_cell = -1;
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            if (cells[c].size() > 1) {
                branch_cell = c;
                break;
            }
        if (branch_cell < 0) {
            visit_leaf(cells);
            return;
        }
        for (int v : cells[branch_cell]) {
            Partition split;
            split.reserve(cells.size() + 1);
            for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
                if (c != branch_cell) {
                    split.push_back(cells[c]);
                    continue;
                }
                split.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v) rest.push_back(w);
                split.push_back(std::move(rest));
            }
            search(std::move(split));
        }
    }

    static int sort_parity(std::vector<int>& tuple) {
        int parity = 1;
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
                if (tuple[i] > tuple[j]) {
                    std::swap(tuple[i], tuple[j]);
                    parity = -parity;
                }
        return parity;
    }

    void visit_leaf(const Partition& cells) {
        // cells are singletons; vertex in cell i gets label i
        std::vector<int> label(total);
        for (int c = 0; c < static_cast<int>(cells.size()); ++c) label[cells[c][0]] = c;

        // Relabel tuples (preserving slot order), then sort and track parity.
        std::vector<std::vector<int>> tuples(input->aerial_count());
        int parity = 1;
        for (int a = 0; a < input->aerial_count(); ++a) {
            const int old_v = ground + a;
            std::vector<int> t;
            t.reserve(input->out_targets(a).size());
            for (int w : input->out_targets(a)) t.push_back(label[w]);
            parity *= sort_parity(t);
            tuples[label[old_v] - ground] = std::move(t);
        }
        std::vector<int> encoding;
        encoding.reserve(static_cast<std::size_t>(input->edge_count()));
        for (const auto& t : tuples) {
            encoding.push_back(static_cast<int>(t.size()));
            encoding.insert(encoding.end(), t.begin(), t.end());
        }

        if (!best_valid || encoding < best_encoding) {
            best_valid = true;
            best_encoding = std::move(encoding);
            best_tuples = std::move(tuples);
            parity_plus = parity > 0;
            parity_minus = parity < 0;
        } else if (encoding == best_encoding) {
            if (parity > 0)
                parity_plus = true;
            else
                parity_minus = true;
        }
    }
};

}  // namespace

SignedCanonical canonical_form(const FormalityGraph& g) {
    if (g.aerial_count() == 0) return {g, 1};

    CanonicalSearch search(g);
    CanonicalSearch::Partition cells;
    for (int s = 0; s < g.ground_count(); ++s) cells.push_back({s});
    const int trident = g.trident_index();
    if (trident >= 0) cells.push_back({g.ground_count() + trident});
    std::vector<int> wedges;
    for (int a = 0; a < g.aerial_count(); ++a)
        if (a != trident) wedges.push_back(g.ground_count() + a);
    if (!wedges.empty()) cells.push_back(std::move(wedges));

    search.search(std::move(cells));

    FormalityGraph canon(g.ground_count(), search.best_tuples);
    int sign = 0;
    if (search.parity_plus && !search.parity_minus) sign = 1;
    if (search.parity_minus && !search.parity_plus) sign = -1;
    return {std::move(canon), sign};
}

}  // namespace kgs
