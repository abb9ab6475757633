#include "kgs/factorize.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "kgs/leibniz.hpp"
#include "kgs/parallel.hpp"
#include "kgs/sparse_solver.hpp"

namespace kgs {

namespace {

std::string profile_prefix(const std::vector<int>& order) {
    std::string s = "(";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(order[i]);
    }
    s += ")";
    return s;
}

struct ComponentWork {
    Certificate cert;
    std::vector<Layer> layers;
    GraphSeries residual{2};
};

std::vector<unsigned> slice_exponents(const GraphSeries& s) {
    std::set<unsigned> exponents;
    for (const auto& [g, c] : s.entries())
        for (const auto& [e, r] : c.terms()) exponents.insert(e);
    if (exponents.empty()) exponents.insert(0);
    return {exponents.begin(), exponents.end()};
}

// The contract-expand-solve iteration for one homogeneous component.
ComponentWork factorize_core(const TriDiffComponent& target, Mode mode, int max_layers) {
    const bool affine = (mode == Mode::affine);
    const GraphSeries& goal = target.combination;

    ComponentWork work;
    work.cert.order = target.order;
    work.cert.hbar_order = target.hbar_order;
    work.residual = GraphSeries(goal.sinks());

    std::map<FormalityGraph, int> row_of;  // discovery-ordered row indices
    for (const auto& [g, c] : goal.entries()) row_of.emplace(g, static_cast<int>(row_of.size()));

    std::vector<FormalityGraph> pool;            // column order
    std::set<FormalityGraph> pool_set;
    std::vector<GraphSeries> expansions;         // parallel to pool
    std::vector<FormalityGraph> frontier;
    for (const auto& [g, c] : goal.entries()) frontier.push_back(g);

    std::string trace = profile_prefix(target.order) + ": " + std::to_string(goal.size()) + "K";
    bool success = false;

    const auto exponents = slice_exponents(goal);

    for (int layer = 0; layer < max_layers && !success; ++layer) {
        std::set<FormalityGraph> new_leibniz;
        for (const auto& k : frontier)
            for (auto& L : contract_edges(k, affine))
                if (!pool_set.count(L)) new_leibniz.insert(std::move(L));
        if (new_leibniz.empty()) break;  // saturated

        Layer record;
        record.index = layer;
        record.leibniz_set.assign(new_leibniz.begin(), new_leibniz.end());
        trace += " -> +" + std::to_string(new_leibniz.size()) + "L";

        std::set<FormalityGraph> new_kontsevich;
        for (const auto& L : new_leibniz) {
            pool.push_back(L);
            pool_set.insert(L);
            expansions.push_back(expand_leibniz(L, affine));
            for (const auto& [g, c] : expansions.back().entries())
                if (!row_of.count(g)) new_kontsevich.insert(g);
        }
        for (const auto& g : new_kontsevich) row_of.emplace(g, static_cast<int>(row_of.size()));
        record.kontsevich_frontier.assign(new_kontsevich.begin(), new_kontsevich.end());
        trace += " -> +" + std::to_string(new_kontsevich.size()) + "K";
        frontier = record.kontsevich_frontier;
        work.layers.push_back(std::move(record));

        // One solve per z-slice over Q against the current pool.
        SparseSystem base(static_cast<int>(pool.size()));
        std::vector<std::map<int, Rational>> matrix_rows(row_of.size());
        for (int col = 0; col < static_cast<int>(pool.size()); ++col)
            for (const auto& [g, c] : expansions[col].entries())
                matrix_rows[row_of.at(g)][col] = c.slice(0);

        bool all_consistent = true;
        std::vector<std::vector<Rational>> slice_solutions;
        GraphSeries residual(goal.sinks());
        for (unsigned e : exponents) {
            SparseSystem sys(static_cast<int>(pool.size()));
            for (const auto& [g, r] : row_of) sys.add_row(matrix_rows[r], goal.coefficient(g).slice(e));
            SolveOutcome outcome = solve_sparse(sys);
            if (!outcome.consistent) {
                all_consistent = false;
                // residual = b - A x, captured as a graph series
                for (const auto& [g, r] : row_of) {
                    Rational acc = 0;
                    for (const auto& [c, v] : matrix_rows[r]) acc += v * outcome.x[c];
                    Rational res = goal.coefficient(g).slice(e) - acc;
                    if (res != 0) residual.add_canonical(g, Coefficient::z_term(res, e));
                }
            }
            slice_solutions.push_back(std::move(outcome.x));
        }
        if (all_consistent) {
            success = true;
            for (int col = 0; col < static_cast<int>(pool.size()); ++col) {
                Coefficient c;
                for (std::size_t s = 0; s < exponents.size(); ++s)
                    c += Coefficient::z_term(slice_solutions[s][col], exponents[s]);
                if (!c.is_zero()) work.cert.terms.emplace_back(pool[col], c);
            }
        } else if (layer == max_layers - 1) {
            work.residual = residual;
        }
    }

    work.cert.status = success;
    work.cert.log = trace + "\n" + (success ? "True" : "False");
    return work;
}

}  // namespace

Certificate factorize_component(const TriDiffComponent& target,
                                const std::vector<FormalityGraph>& leibniz_pool, Mode mode) {
    const bool affine = (mode == Mode::affine);
    Certificate cert;
    cert.order = target.order;
    cert.hbar_order = target.hbar_order;

    std::map<FormalityGraph, int> row_of;
    for (const auto& [g, c] : target.combination.entries())
        row_of.emplace(g, static_cast<int>(row_of.size()));

    std::vector<GraphSeries> expansions;
    expansions.reserve(leibniz_pool.size());
    for (const auto& L : leibniz_pool) {
        expansions.push_back(expand_leibniz(L, affine));
        for (const auto& [g, c] : expansions.back().entries())
            row_of.emplace(g, static_cast<int>(row_of.size()));
    }

    std::vector<std::map<int, Rational>> matrix_rows(row_of.size());
    for (int col = 0; col < static_cast<int>(leibniz_pool.size()); ++col)
        for (const auto& [g, c] : expansions[col].entries())
            matrix_rows[row_of.at(g)][col] = c.slice(0);

    const auto exponents = slice_exponents(target.combination);
    bool all_consistent = true;
    std::vector<std::vector<Rational>> slice_solutions;
    for (unsigned e : exponents) {
        SparseSystem sys(static_cast<int>(leibniz_pool.size()));
        for (const auto& [g, r] : row_of)
            sys.add_row(matrix_rows[r], target.combination.coefficient(g).slice(e));
        SolveOutcome outcome = solve_sparse(sys);
        all_consistent = all_consistent && outcome.consistent;
        slice_solutions.push_back(std::move(outcome.x));
    }
    cert.status = all_consistent;
    if (all_consistent) {
        for (int col = 0; col < static_cast<int>(leibniz_pool.size()); ++col) {
            Coefficient c;
            for (std::size_t s = 0; s < exponents.size(); ++s)
                c += Coefficient::z_term(slice_solutions[s][col], exponents[s]);
            if (!c.is_zero()) cert.terms.emplace_back(leibniz_pool[col], c);
        }
    }
    return cert;
}

std::pair<std::vector<Layer>, std::string> layer_closure(const TriDiffComponent& target,
                                                         int max_layers, Mode mode) {
    ComponentWork work = factorize_core(target, mode, max_layers);
    return {std::move(work.layers), std::move(work.cert.log)};
}

SeriesFactorization factorize_series(const GraphSeries& assoc, int max_order,
                                     const FactorizeOptions& options) {
    SeriesFactorization result;
    std::ostringstream log;
    for (int n = 0; n <= max_order; ++n) {
        GraphSeries part = assoc.order_part(n);
        if (options.slice != SlicePolicy::merged)
            part = slice_series(part, static_cast<unsigned>(options.slice));
        auto components = split_by_tridiff(part, n);
        if (components.empty()) continue;
        log << "h^" << n << ":\n";
        log << "Number of differential orders: " << components.size() << "\n";
        std::vector<ComponentWork> work(components.size());
        parallel_for(components.size(), options.jobs, [&](std::size_t i) {
            work[i] = factorize_core(components[i], options.mode, options.max_layers);
        });
        for (std::size_t i = 0; i < components.size(); ++i) {
            log << work[i].cert.log << "\n";
            result.all_true = result.all_true && work[i].cert.status;
            result.certificates.emplace(std::make_pair(n, components[i].order),
                                        std::move(work[i].cert));
        }
    }
    result.log = log.str();
    return result;
}

ReduceResult reduce_series(const GraphSeries& star, unsigned slice_exponent,
                           const FactorizeOptions& options) {
    if (star.sinks() != 2) throw series_error("reduction expects a 2-sink series");
    ReduceResult result;
    result.reduced = GraphSeries(2);
    result.residual = GraphSeries(2);

    GraphSeries slice = slice_series(star, slice_exponent);
    if (slice.empty()) {
        result.reduced = star;
        result.status = true;
        result.log = "slice z^" + std::to_string(slice_exponent) + " is zero; nothing to reduce\n";
        return result;
    }

    std::ostringstream log;
    bool all_true = true;
    const int top = slice.max_order();
    for (int n = 0; n <= top; ++n) {
        auto components = split_by_tridiff(slice.order_part(n), n);
        if (components.empty()) continue;
        log << "h^" << n << ":\n";
        log << "Number of differential orders: " << components.size() << "\n";
        std::vector<ComponentWork> work(components.size());
        parallel_for(components.size(), options.jobs, [&](std::size_t i) {
            work[i] = factorize_core(components[i], options.mode, options.max_layers);
        });
        for (std::size_t i = 0; i < components.size(); ++i) {
            log << work[i].cert.log << "\n";
            if (!work[i].cert.status) {
                all_true = false;
                result.residual.add_series(work[i].residual);
            }
            result.remainder.emplace(std::make_pair(n, components[i].order),
                                     std::move(work[i].cert));
        }
    }
    result.status = all_true;
    result.log = log.str();
    if (all_true) {
        // drop the whole z^e slice: it equals a Leibniz combination
        result.reduced = star;
        for (const auto& [g, c] : slice.entries())
            result.reduced.add_canonical(g, Coefficient::z_term(-c.slice(0), slice_exponent));
    } else {
        result.reduced = star;
    }
    return result;
}

void write_certificate(std::ostream& out, const Certificate& cert) {
    out << "format kgs-cert v1; order=" << profile_prefix(cert.order)
        << "; hbar=" << cert.hbar_order << "; status=" << (cert.status ? "True" : "False") << "\n";
    for (const auto& [L, c] : cert.terms) out << encode_graph(L) << "; " << c.to_string() << "\n";
}

Certificate read_certificate(std::istream& in) {
    Certificate cert;
    std::string line;
    if (!std::getline(in, line)) throw parse_error("empty certificate file");
    std::istringstream header(line);
    std::string token;
    std::getline(header, token, ';');
    if (token != "format kgs-cert v1") throw parse_error("bad certificate header");
    while (std::getline(header, token, ';')) {
        auto eq = token.find('=');
        if (eq == std::string::npos) throw parse_error("bad certificate header field");
        std::string key = token.substr(0, eq);
        key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
        std::string value = token.substr(eq + 1);
        if (key == "order") {
            std::vector<int> order;
            std::string digits;
            for (char c : value) {
                if (std::isdigit(static_cast<unsigned char>(c)))
                    digits += c;
                else if (!digits.empty()) {
                    order.push_back(std::stoi(digits));
                    digits.clear();
                }
            }
            if (!digits.empty()) order.push_back(std::stoi(digits));
            cert.order = order;
        } else if (key == "hbar") {
            cert.hbar_order = std::stoi(value);
        } else if (key == "status") {
            cert.status = (value.find("True") != std::string::npos);
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto semi = line.rfind(';');
        if (semi == std::string::npos) throw parse_error("certificate line needs ';'");
        FormalityGraph L = parse_graph(line.substr(0, semi));
        cert.terms.emplace_back(std::move(L), parse_coefficient(line.substr(semi + 1)));
    }
    return cert;
}

}  // namespace kgs
