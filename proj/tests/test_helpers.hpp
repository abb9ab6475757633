#ifndef KGS_TEST_HELPERS_HPP
#define KGS_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kgs/graph.hpp"

namespace kgs_test {

// Brute-force reference machinery, independent of kgs::canonical_form: the
// isomorphism-class key is the minimum over *all* aerial relabelings of the
// sorted-tuple encoding, and zero detection sums sign-weighted copies over
// automorphism-induced tuple orderings.

inline int sort_parity(std::vector<int>& tuple) {
    int parity = 1;
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) {
                std::swap(tuple[i], tuple[j]);
                parity = -parity;
            }
    return parity;
}

// Applies an aerial relabeling (perm[i] = new aerial index of aerial i),
// sorts tuples, and reports the total sorting parity.
inline std::pair<std::vector<std::vector<int>>, int> relabel_sorted(const kgs::FormalityGraph& g,
                                                                    const std::vector<int>& perm) {
    const int m = g.ground_count();
    std::vector<std::vector<int>> tuples(g.aerial_count());
    int parity = 1;
    for (int a = 0; a < g.aerial_count(); ++a) {
        std::vector<int> t;
        for (int w : g.out_targets(a)) t.push_back(w < m ? w : m + perm[w - m]);
        parity *= sort_parity(t);
        tuples[perm[a]] = std::move(t);
    }
    return {std::move(tuples), parity};
}

inline std::vector<int> flatten(const std::vector<std::vector<int>>& tuples) {
    std::vector<int> enc;
    for (const auto& t : tuples) {
        enc.push_back(static_cast<int>(t.size()));
        enc.insert(enc.end(), t.begin(), t.end());
    }
    return enc;
}

// Minimal encoding over all aerial relabelings: an isomorphism-class key.
inline std::vector<int> brute_iso_key(const kgs::FormalityGraph& g) {
    std::vector<int> perm(g.aerial_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    bool first = true;
    do {
        auto [tuples, parity] = relabel_sorted(g, perm);
        auto enc = flatten(tuples);
        if (first || enc < best) {
            best = std::move(enc);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// g is a zero graph iff some relabeling reproduces the sorted structure of g
// with odd induced parity.  Assumes g has sorted tuples.
inline bool brute_is_zero(const kgs::FormalityGraph& g) {
    std::vector<int> id(g.aerial_count());
    std::iota(id.begin(), id.end(), 0);
    auto [base, base_parity] = relabel_sorted(g, id);
    std::vector<int> perm = id;
    do {
        auto [tuples, parity] = relabel_sorted(g, perm);
        if (tuples == base && parity != base_parity) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Random relabeling plus random tuple reorderings; returns the shuffled graph
// and the parity of the tuple reorderings applied.
inline std::pair<kgs::FormalityGraph, int> random_shuffle_graph(const kgs::FormalityGraph& g,
                                                                std::mt19937& rng) {
    std::vector<int> perm(g.aerial_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int m = g.ground_count();
    std::vector<std::vector<int>> tuples(g.aerial_count());
    int parity = 1;
    for (int a = 0; a < g.aerial_count(); ++a) {
        std::vector<int> t;
        for (int w : g.out_targets(a)) t.push_back(w < m ? w : m + perm[w - m]);
        // random permutation of the tuple, tracking parity
        for (std::size_t i = t.size(); i > 1; --i) {
            std::uniform_int_distribution<std::size_t> pick(0, i - 1);
            std::size_t j = pick(rng);
            if (j != i - 1) {
                std::swap(t[j], t[i - 1]);
                parity = -parity;
            }
        }
        tuples[perm[a]] = std::move(t);
    }
    return {kgs::FormalityGraph(m, std::move(tuples)), parity};
}

}  // namespace kgs_test

#endif
