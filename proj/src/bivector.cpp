#include "kgs/bivector.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace kgs {

void PolyBivector::set_component(int i, int j, Polynomial p) {
    if (!(0 <= i && i < j && j < dim_)) throw std::out_of_range("bivector component indices");
    if (p.is_zero())
        upper_.erase({i, j});
    else
        upper_.insert_or_assign({i, j}, std::move(p));
}

Polynomial PolyBivector::component(int i, int j) const {
    if (i == j) return Polynomial(dim_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = upper_.find({i, j});
    if (it == upper_.end()) return Polynomial(dim_);
    return flip ? -it->second : it->second;
}

PolyBivector PolyBivector::translated(const std::vector<Rational>& shift) const {
    PolyBivector out(dim_);
    for (const auto& [ij, p] : upper_) out.set_component(ij.first, ij.second, p.translated(shift));
    return out;
}

void PolyTrivector::set_component(int i, int j, int k, Polynomial p) {
    if (!(0 <= i && i < j && j < k && k < dim_))
        throw std::out_of_range("trivector component indices");
    if (p.is_zero())
        sorted_.erase({i, j, k});
    else
        sorted_.insert_or_assign({i, j, k}, std::move(p));
}

Polynomial PolyTrivector::component(int i, int j, int k) const {
    if (i == j || j == k || i == k) return Polynomial(dim_);
    // sort (i,j,k) tracking permutation sign
    int sign = 1;
    int a = i, b = j, c = k;
    if (a > b) { std::swap(a, b); sign = -sign; }
    if (b > c) { std::swap(b, c); sign = -sign; }
    if (a > b) { std::swap(a, b); sign = -sign; }
    auto it = sorted_.find({a, b, c});
    if (it == sorted_.end()) return Polynomial(dim_);
    return sign > 0 ? it->second : -it->second;
}

PolyTrivector jacobiator(const PolyBivector& P) {
    const int d = P.dimension();
    PolyTrivector jac(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                Polynomial sum(d);
                for (int l = 0; l < d; ++l) {
                    sum += P.component(i, l) * P.component(j, k).derivative(l);
                    sum += P.component(j, l) * P.component(k, i).derivative(l);
                    sum += P.component(k, l) * P.component(i, j).derivative(l);
                }
                jac.set_component(i, j, k, std::move(sum));
            }
    return jac;
}

PolyBivector so3_bivector() {
    PolyBivector P(3);
    P.set_component(0, 1, Polynomial::variable(3, 2));   // P^{12} = x3
    P.set_component(1, 2, Polynomial::variable(3, 0));   // P^{23} = x1
    P.set_component(0, 2, -Polynomial::variable(3, 1));  // P^{13} = -x2
    return P;
}

PolyBivector symplectic_2d() {
    PolyBivector P(2);
    P.set_component(0, 1, Polynomial::constant(2, 1));
    return P;
}

PolyBivector nonpoisson_quadratic() {
    PolyBivector P(3);
    P.set_component(0, 1, Polynomial::variable(3, 0) * Polynomial::variable(3, 0));
    P.set_component(0, 2, Polynomial::variable(3, 1));
    P.set_component(1, 2, Polynomial::variable(3, 2));
    return P;
}

PolyBivector nonpoisson_linear() {
    PolyBivector P(3);
    P.set_component(0, 1, Polynomial::variable(3, 0));
    P.set_component(0, 2, Polynomial::variable(3, 2));
    P.set_component(1, 2, Polynomial::variable(3, 1));
    return P;
}

PolyBivector read_poisson_structure(std::istream& in) {
    std::string line;
    int dim = -1;
    PolyBivector P(1);
    bool have_dim = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!have_dim) {
            std::istringstream head(line);
            std::string word;
            head >> word;
            if (word != "dim" || !(head >> dim) || dim < 1)
                throw parse_error("expected 'dim <d>' header");
            P = PolyBivector(dim);
            have_dim = true;
            continue;
        }
        auto semi = line.find(';');
        if (semi == std::string::npos) throw parse_error("component line needs ';'");
        std::istringstream head(line.substr(0, semi));
        int i = 0, j = 0;
        if (!(head >> i >> j)) throw parse_error("expected 'i j;' component indices");
        if (!(1 <= i && i < j && j <= dim)) throw parse_error("component indices out of range");
        P.set_component(i - 1, j - 1, parse_polynomial(dim, line.substr(semi + 1)));
    }
    if (!have_dim) throw parse_error("missing 'dim' header");
    return P;
}

void write_poisson_structure(std::ostream& out, const PolyBivector& P) {
    out << "dim " << P.dimension() << "\n";
    for (const auto& [ij, p] : P.upper_components())
        out << (ij.first + 1) << " " << (ij.second + 1) << "; " << p.to_string() << "\n";
}

}  // namespace kgs
