#include "kgs/evaluate.hpp"

#include <set>

#include "kgs/leibniz.hpp"

namespace kgs {

namespace {

struct VertexChoice {
    std::vector<int> indices;  // one index per out-edge, in tuple order
    Polynomial content;
};

}  // namespace

Polynomial evaluate_graph(const FormalityGraph& g, const PolyBivector& P,
                          const std::vector<Polynomial>& args) {
    const int d = P.dimension();
    const int m = g.ground_count();
    if (static_cast<int>(args.size()) != m) throw series_error("argument arity mismatch");
    for (const auto& f : args)
        if (f.dimension() != d) throw series_error("argument dimension mismatch");

    PolyTrivector jac(d);
    if (g.has_trident()) jac = jacobiator(P);

    // Per aerial vertex: the index tuples with nonzero content.
    std::vector<std::vector<VertexChoice>> choices(g.aerial_count());
    for (int a = 0; a < g.aerial_count(); ++a) {
        if (g.out_targets(a).size() == 2) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    if (i == j) continue;
                    Polynomial p = P.component(i, j);
                    if (!p.is_zero()) choices[a].push_back({{i, j}, std::move(p)});
                }
        } else {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k) {
                        if (i == j || j == k || i == k) continue;
                        Polynomial p = jac.component(i, j, k);
                        if (!p.is_zero()) choices[a].push_back({{i, j, k}, std::move(p)});
                    }
        }
    }

    // Incoming edges per vertex as (source aerial index, tuple slot).
    std::vector<std::vector<std::pair<int, int>>> incoming(g.vertex_count());
    for (int a = 0; a < g.aerial_count(); ++a) {
        const auto& t = g.out_targets(a);
        for (int p = 0; p < static_cast<int>(t.size()); ++p) incoming[t[p]].emplace_back(a, p);
    }

    Polynomial total(d);
    std::vector<const VertexChoice*> pick(g.aerial_count(), nullptr);
    auto rec = [&](auto&& rec, int a) -> void {
        if (a < g.aerial_count()) {
            for (const auto& choice : choices[a]) {
                pick[a] = &choice;
                rec(rec, a + 1);
            }
            return;
        }
        Polynomial product = Polynomial::constant(d, 1);
        for (int v = 0; v < g.vertex_count() && !product.is_zero(); ++v) {
            Polynomial content = (v < m) ? args[v] : pick[v - m]->content;
            for (const auto& [src, slot] : incoming[v]) content = content.derivative(pick[src]->indices[slot]);
            product = product * content;
        }
        total += product;
    };
    rec(rec, 0);
    return total;
}

SeriesValue evaluate_series(const GraphSeries& s, const PolyBivector& P,
                            const std::vector<Polynomial>& args) {
    SeriesValue out;
    const int d = P.dimension();
    for (const auto& [g, c] : s.entries()) {
        Polynomial value = evaluate_graph(g, P, args);
        if (value.is_zero()) continue;
        for (const auto& [e, r] : c.terms()) {
            auto key = std::make_pair(g.aerial_count(), e);
            auto it = out.find(key);
            if (it == out.end()) it = out.emplace(key, Polynomial(d)).first;
            it->second += value * r;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, Polynomial> evaluate_series_at_z(const GraphSeries& s, const PolyBivector& P,
                                               const std::vector<Polynomial>& args,
                                               const Rational& z_value) {
    std::map<int, Polynomial> out;
    const int d = P.dimension();
    for (const auto& [g, c] : s.entries()) {
        Rational weight = c.evaluate_z(z_value);
        if (weight == 0) continue;
        Polynomial value = evaluate_graph(g, P, args);
        if (value.is_zero()) continue;
        auto it = out.find(g.aerial_count());
        if (it == out.end()) it = out.emplace(g.aerial_count(), Polynomial(d)).first;
        it->second += value * weight;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

CertificateCheck check_certificate(const Certificate& cert, const TriDiffComponent& target,
                                   const std::vector<PolyBivector>& poisson_samples,
                                   const std::vector<PolyBivector>& nonpoisson_samples,
                                   const std::vector<std::vector<Polynomial>>& arg_samples,
                                   Mode mode) {
    CertificateCheck result;
    const bool affine = (mode == Mode::affine);

    GraphSeries expanded(target.combination.sinks());
    for (const auto& [L, c] : cert.terms) expanded.add_series(expand_leibniz(L, affine).scaled(c));
    result.structural = (expanded == target.combination);
    if (!result.structural) {
        result.failure = "structural: certificate expansion does not reproduce the component";
        return result;
    }

    // Semantic route: the Leibniz side evaluated with the Jacobiator in the
    // trident versus the target's Kontsevich graphs, per z-slice.
    result.semantic = true;
    for (const auto& P : nonpoisson_samples) {
        for (const auto& args : arg_samples) {
            if (static_cast<int>(args.size()) != target.combination.sinks()) continue;
            std::map<unsigned, Polynomial> lhs;
            for (const auto& [L, c] : cert.terms) {
                Polynomial value = evaluate_graph(L, P, args);
                for (const auto& [e, r] : c.terms()) {
                    auto it = lhs.find(e);
                    if (it == lhs.end()) it = lhs.emplace(e, Polynomial(P.dimension())).first;
                    it->second += value * r;
                }
            }
            SeriesValue rhs = evaluate_series(target.combination, P, args);
            std::set<unsigned> exponents;
            for (const auto& [e, p] : lhs)
                if (!p.is_zero()) exponents.insert(e);
            for (const auto& [key, p] : rhs) exponents.insert(key.second);
            for (unsigned e : exponents) {
                Polynomial l = lhs.count(e) ? lhs.at(e) : Polynomial(P.dimension());
                auto rit = rhs.find({target.hbar_order, e});
                Polynomial r = (rit != rhs.end()) ? rit->second : Polynomial(P.dimension());
                if (!(l == r)) {
                    result.semantic = false;
                    result.failure = "semantic: evaluated sides differ on a non-Poisson sample";
                    return result;
                }
            }
        }
    }

    result.poisson_vanishing = true;
    for (const auto& P : poisson_samples) {
        for (const auto& args : arg_samples) {
            if (static_cast<int>(args.size()) != target.combination.sinks()) continue;
            if (!evaluate_series(target.combination, P, args).empty()) {
                result.poisson_vanishing = false;
                result.failure = "poisson: component does not vanish on a Poisson sample";
                return result;
            }
        }
    }
    return result;
}

}  // namespace kgs
