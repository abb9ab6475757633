#include "kgs/star_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kgs {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

StarProduct read_series(std::istream& in, int expected_sinks) {
    StarProduct result;
    result.series = GraphSeries(expected_sinks);
    Normalization norm = Normalization::operator_form;

    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (first_content) {
            first_content = false;
            if (t.rfind("format", 0) == 0) {
                if (t.find("kgs-star v1") == std::string::npos)
                    throw parse_error("unsupported series format: " + t);
                if (t.find("normalization=weights") != std::string::npos)
                    norm = Normalization::weights;
                else if (t.find("normalization=operator") != std::string::npos)
                    norm = Normalization::operator_form;
                else
                    throw parse_error("missing normalization in header: " + t);
                continue;
            }
        }

        // fields: [order;] m n; targets; coefficient
        std::vector<std::string> fields;
        std::string piece;
        std::istringstream split(t);
        while (std::getline(split, piece, ';')) fields.push_back(trim(piece));
        int declared_order = -1;
        std::size_t at = 0;
        if (fields.size() == 4) {
            if (!is_integer_token(fields[0])) throw parse_error("bad hbar-order field: " + t);
            declared_order = std::stoi(fields[0]);
            at = 1;
        } else if (fields.size() != 3) {
            throw parse_error("expected '[order;] m n; targets; coefficient': " + t);
        }
        FormalityGraph g = parse_graph(fields[at] + ";" + fields[at + 1]);
        if (declared_order >= 0 && declared_order != g.aerial_count())
            throw parse_error("hbar-order disagrees with aerial count: " + t);
        Coefficient c = parse_coefficient(fields[at + 2]);
        if (norm == Normalization::weights) {
            Rational inv_fact = 1 / factorial(g.aerial_count());
            c *= inv_fact;
        }
        result.series.add(g, c);
        result.max_order = std::max(result.max_order, g.aerial_count());
    }
    return result;
}

StarProduct load_star_product(std::istream& in, bool affine) {
    StarProduct loaded = read_series(in, 2);
    for (const auto& [g, c] : loaded.series.entries())
        if (!g.is_kontsevich()) throw series_error("non-Kontsevich graph in star-product file");
    if (affine) {
        GraphSeries filtered = loaded.series.affine_part();
        loaded.series = filtered;
    }

    const FormalityGraph unit(2, {});
    if (!(loaded.series.coefficient(unit) == Coefficient(1)))
        throw series_error("star product must start with the bare product (unit term)");
    const FormalityGraph wedge(2, {{0, 1}});
    if (loaded.max_order >= 1 && loaded.series.coefficient(wedge).is_zero())
        throw series_error("star product lacks the order-1 wedge term");
    return loaded;
}

void write_series(std::ostream& out, const GraphSeries& series) {
    out << "format kgs-star v1; normalization=operator\n";
    for (const auto& [g, c] : series.entries()) {
        std::string targets;
        for (const auto& tuple : g.out_edges())
            for (int v : tuple) targets += (targets.empty() ? "" : " ") + std::to_string(v);
        out << g.aerial_count() << "; " << g.ground_count() << " " << g.aerial_count() << "; "
            << targets << "; " << c.to_string() << "\n";
    }
}

StarProduct read_series_file(const std::string& path, int expected_sinks) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_series(in, expected_sinks);
}

StarProduct load_star_product_file(const std::string& path, bool affine) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return load_star_product(in, affine);
}

void write_series_file(const std::string& path, const GraphSeries& series) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_series(out, series);
}

}  // namespace kgs
