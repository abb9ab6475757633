#include "kgs/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace kgs {

Polynomial Polynomial::constant(int dim, const Rational& r) {
    Polynomial p(dim);
    p.add_term(Monomial(dim, 0), r);
    return p;
}

Polynomial Polynomial::variable(int dim, int index) {
    if (index < 0 || index >= dim) throw std::out_of_range("variable index");
    Polynomial p(dim);
    Monomial mono(dim, 0);
    mono[index] = 1;
    p.add_term(mono, 1);
    return p;
}

void Polynomial::add_term(const Monomial& mono, const Rational& r) {
    if (r == 0) return;
    auto [it, fresh] = terms_.emplace(mono, r);
    if (!fresh) {
        it->second += r;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, r] : o.terms_) add_term(m, r);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, r] : o.terms_) add_term(m, -r);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(dim_);
    for (const auto& [m, r] : terms_) p.terms_.emplace(m, -r);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(a.dim_);
    Polynomial::Monomial mono(a.dim_);
    for (const auto& [ma, ra] : a.terms_)
        for (const auto& [mb, rb] : b.terms_) {
            for (int i = 0; i < a.dim_; ++i) mono[i] = ma[i] + mb[i];
            p.add_term(mono, ra * rb);
        }
    return p;
}

Polynomial& Polynomial::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, q] : terms_) q *= r;
    return *this;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial p(dim_);
    for (const auto& [m, r] : terms_) {
        if (m[var] == 0) continue;
        Monomial mono = m;
        --mono[var];
        p.add_term(mono, r * static_cast<long>(m[var]));
    }
    return p;
}

Polynomial Polynomial::translated(const std::vector<Rational>& shift) const {
    // substitute x_i -> x_i + shift_i, expanding binomially per variable
    Polynomial result(dim_);
    for (const auto& [m, r] : terms_) {
        Polynomial term = Polynomial::constant(dim_, r);
        for (int i = 0; i < dim_; ++i) {
            Polynomial base = Polynomial::variable(dim_, i) + Polynomial::constant(dim_, shift[i]);
            for (unsigned e = 0; e < m[i]; ++e) term = term * base;
        }
        result += term;
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, r] : terms_) {
        Rational a = r;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string vars;
        for (int i = 0; i < dim_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out += rational_to_string(a);
        } else {
            if (a != 1) out += rational_to_string(a) + "*";
            out += vars;
        }
        first = false;
    }
    return out;
}

namespace {

std::pair<Polynomial::Monomial, Rational> parse_poly_term(int dim, std::string_view term) {
    Polynomial::Monomial mono(dim, 0);
    Rational coeff = 1;
    bool saw_factor = false;
    std::string s(term);
    std::size_t pos = 0;
    bool negative = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') negative = !negative;
        ++pos;
    }
    while (pos < s.size()) {
        if (s[pos] == '*') {
            ++pos;
            continue;
        }
        if (s[pos] == 'x') {
            std::size_t end = pos + 1;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            if (end == pos + 1) throw parse_error("bad variable in '" + s + "'");
            int var = std::stoi(s.substr(pos + 1, end - pos - 1));
            if (var < 1 || var > dim) throw parse_error("variable out of range in '" + s + "'");
            unsigned exp = 1;
            pos = end;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == estart) throw parse_error("missing exponent in '" + s + "'");
                exp = static_cast<unsigned>(std::stoul(s.substr(estart, pos - estart)));
            }
            mono[var - 1] += exp;
            saw_factor = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t end = pos;
            while (end < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/'))
                ++end;
            coeff *= parse_rational(s.substr(pos, end - pos));
            pos = end;
            saw_factor = true;
        } else {
            throw parse_error("bad character in polynomial term '" + s + "'");
        }
    }
    if (!saw_factor) throw parse_error("empty polynomial term");
    if (negative) coeff = -coeff;
    return {mono, coeff};
}

}  // namespace

Polynomial parse_polynomial(int dim, std::string_view text) {
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped.empty()) throw parse_error("empty polynomial");
    if (stripped == "0") return Polynomial(dim);

    Polynomial p(dim);
    std::string cur;
    for (std::size_t i = 0; i < stripped.size(); ++i) {
        char c = stripped[i];
        if ((c == '+' || c == '-') && !cur.empty() && cur.back() != '*' && cur.back() != '^' &&
            cur.back() != '/' && cur.back() != '+' && cur.back() != '-') {
            auto [m, r] = parse_poly_term(dim, cur);
            p.add_term(m, r);
            cur.clear();
        }
        cur += c;
    }
    auto [m, r] = parse_poly_term(dim, cur);
    p.add_term(m, r);
    return p;
}

}  // namespace kgs
