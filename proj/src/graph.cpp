#include "kgs/graph.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace kgs {

FormalityGraph::FormalityGraph(int ground_count, std::vector<std::vector<int>> out_edges)
    : ground_count_(ground_count), out_edges_(std::move(out_edges)) {
    if (ground_count_ < 1) throw graph_error("need at least one ground vertex");
    const int total = vertex_count();
    int tridents = 0;
    for (int a = 0; a < aerial_count(); ++a) {
        const auto& tuple = out_edges_[a];
        const int self = ground_count_ + a;
        if (tuple.size() != 2 && tuple.size() != 3)
            throw graph_error("out-edge tuple must have 2 or 3 targets");
        if (tuple.size() == 3) ++tridents;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] < 0 || tuple[i] >= total)
                throw graph_error("target label out of range");
            if (tuple[i] == self) throw graph_error("tadpole");
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
                if (tuple[i] == tuple[j]) throw graph_error("duplicate edge");
        }
    }
    if (tridents > 1) throw graph_error("more than one trident");
}

int FormalityGraph::trident_index() const {
    for (int a = 0; a < aerial_count(); ++a)
        if (out_edges_[a].size() == 3) return a;
    return -1;
}

int FormalityGraph::edge_count() const {
    int e = 0;
    for (const auto& t : out_edges_) e += static_cast<int>(t.size());
    return e;
}

std::vector<int> FormalityGraph::in_degrees() const {
    std::vector<int> deg(vertex_count(), 0);
    for (const auto& t : out_edges_)
        for (int v : t) ++deg[v];
    return deg;
}

int FormalityGraph::max_aerial_in_degree() const {
    auto deg = in_degrees();
    int mx = 0;
    for (int v = ground_count_; v < vertex_count(); ++v) mx = std::max(mx, deg[v]);
    return mx;
}

std::strong_ordering operator<=>(const FormalityGraph& a, const FormalityGraph& b) {
    if (auto c = a.ground_count_ <=> b.ground_count_; c != 0) return c;
    if (auto c = a.aerial_count() <=> b.aerial_count(); c != 0) return c;
    return a.out_edges_ <=> b.out_edges_;
}

std::string FormalityGraph::key() const {
    std::string k;
    k.reserve(2 + 3 * out_edges_.size() + 4);
    k.push_back(static_cast<char>(ground_count_));
    k.push_back(static_cast<char>(aerial_count()));
    for (const auto& t : out_edges_) {
        k.push_back(static_cast<char>(t.size()));
        for (int v : t) k.push_back(static_cast<char>(v));
    }
    return k;
}

namespace {

std::optional<FormalityGraph> try_build(int m, const std::vector<int>& tokens, int n,
                                        int trident_pos) {
    std::vector<std::vector<int>> tuples;
    tuples.reserve(n);
    std::size_t pos = 0;
    for (int a = 0; a < n; ++a) {
        std::size_t len = (a == trident_pos) ? 3 : 2;
        std::vector<int> t(tokens.begin() + pos, tokens.begin() + pos + len);
        tuples.push_back(std::move(t));
        pos += len;
    }
    try {
        return FormalityGraph(m, std::move(tuples));
    } catch (const graph_error&) {
        return std::nullopt;
    }
}

}  // namespace

FormalityGraph parse_graph(std::string_view line) {
    auto semi = line.find(';');
    if (semi == std::string_view::npos) throw parse_error("graph encoding needs ';'");
    std::istringstream head{std::string(line.substr(0, semi))};
    int m = -1, n = -1;
    if (!(head >> m >> n)) throw parse_error("expected '<m> <n>' before ';'");
    std::string extra;
    if (head >> extra) throw parse_error("unexpected token before ';'");
    if (m < 1 || n < 0) throw parse_error("bad vertex counts");

    std::istringstream body{std::string(line.substr(semi + 1))};
    std::vector<int> tokens;
    int t;
    while (body >> t) tokens.push_back(t);
    if (!body.eof()) throw parse_error("non-integer target label");

    const std::size_t count = tokens.size();
    if (count == static_cast<std::size_t>(2 * n)) {
        std::vector<std::vector<int>> tuples;
        tuples.reserve(n);
        for (int a = 0; a < n; ++a) tuples.push_back({tokens[2 * a], tokens[2 * a + 1]});
        try {
            return FormalityGraph(m, std::move(tuples));
        } catch (const graph_error& e) {
            throw parse_error(e.what());
        }
    }
    if (count == static_cast<std::size_t>(2 * n + 1)) {
        std::vector<int> valid;
        std::vector<int> sorted_trident;
        for (int p = 0; p < n; ++p) {
            auto g = try_build(m, tokens, n, p);
            if (!g) continue;
            valid.push_back(p);
            const auto& tt = g->out_targets(p);
            if (std::is_sorted(tt.begin(), tt.end())) sorted_trident.push_back(p);
        }
        if (valid.empty()) throw parse_error("no admissible trident placement in '" + std::string(line) + "'");
        int pick = sorted_trident.empty() ? valid.front() : sorted_trident.front();
        return *try_build(m, tokens, n, pick);
    }
    if (count > static_cast<std::size_t>(2 * n + 1)) throw parse_error("more than one trident");
    throw parse_error("too few target labels");
}

std::string encode_graph(const FormalityGraph& g) {
    std::string out = std::to_string(g.ground_count()) + " " + std::to_string(g.aerial_count()) + ";";
    for (const auto& tuple : g.out_edges())
        for (int v : tuple) out += " " + std::to_string(v);
    return out;
}

std::vector<int> tri_differential_order(const FormalityGraph& g) {
    auto deg = g.in_degrees();
    return std::vector<int>(deg.begin(), deg.begin() + g.ground_count());
}

}  // namespace kgs
