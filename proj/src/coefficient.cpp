#include "kgs/coefficient.hpp"

#include <algorithm>
#include <cctype>

namespace kgs {

void Coefficient::set_term(unsigned exponent, const Rational& r) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const auto& t, unsigned e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        if (r == 0)
            terms_.erase(it);
        else
            it->second = r;
    } else if (r != 0) {
        terms_.insert(it, {exponent, r});
    }
}

Rational Coefficient::slice(unsigned exponent) const {
    for (const auto& [e, r] : terms_)
        if (e == exponent) return r;
    return Rational(0);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [e, r] : o.terms_) set_term(e, slice(e) + r);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [e, r] : o.terms_) set_term(e, slice(e) - r);
    return *this;
}

Coefficient Coefficient::operator-() const {
    Coefficient c(*this);
    for (auto& [e, r] : c.terms_) r = -r;
    return c;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient c;
    for (const auto& [ea, ra] : a.terms_)
        for (const auto& [eb, rb] : b.terms_) c.set_term(ea + eb, c.slice(ea + eb) + ra * rb);
    return c;
}

Coefficient& Coefficient::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, q] : terms_) q *= r;
    return *this;
}

Rational Coefficient::evaluate_z(const Rational& z_value) const {
    Rational acc = 0;
    Rational power = 1;
    unsigned last = 0;
    for (const auto& [e, r] : terms_) {
        for (; last < e; ++last) power *= z_value;
        acc += r * power;
    }
    return acc;
}

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, r] : terms_) {
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
        bool unit = (a == 1) && e > 0;
        if (!unit) out += rational_to_string(a);
        if (e > 0) {
            if (!unit) out += "*";
            out += "z";
            if (e > 1) out += "^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

namespace {

// One term: [rational] [*] [z[^e]]  — also accepts bare "z" and "r z".
std::pair<unsigned, Rational> parse_term(std::string_view term) {
    std::string s;
    for (char c : term)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty coefficient term");

    unsigned exponent = 0;
    auto zpos = s.find('z');
    if (zpos != std::string::npos) {
        exponent = 1;
        std::string tail = s.substr(zpos + 1);
        if (!tail.empty()) {
            if (tail[0] != '^') throw parse_error("expected '^' after z in '" + s + "'");
            tail = tail.substr(1);
            if (tail.empty()) throw parse_error("missing exponent after z^");
            exponent = static_cast<unsigned>(std::stoul(tail));
        }
        s = s.substr(0, zpos);
        if (!s.empty() && s.back() == '*') s.pop_back();
        if (s.empty() || s == "+") s = "1";
        if (s == "-") s = "-1";
    }
    return {exponent, parse_rational(s)};
}

}  // namespace

Coefficient parse_coefficient(std::string_view text) {
    // Split on top-level '+'/'-' (a sign not immediately after '/', '^', '*' or at start).
    std::vector<std::string> pieces;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '+' || c == '-') && !cur.empty()) {
            std::string trimmed;
            for (char d : cur)
                if (!std::isspace(static_cast<unsigned char>(d))) trimmed += d;
            if (!trimmed.empty() && trimmed.back() != '/' && trimmed.back() != '^' &&
                trimmed.back() != '*' && trimmed.back() != '+' && trimmed.back() != '-') {
                pieces.push_back(cur);
                cur.clear();
            }
        }
        cur += c;
    }
    pieces.push_back(cur);

    Coefficient result;
    for (const auto& piece : pieces) {
        std::string trimmed;
        for (char d : piece)
            if (!std::isspace(static_cast<unsigned char>(d))) trimmed += d;
        if (trimmed.empty()) throw parse_error("empty coefficient piece in '" + std::string(text) + "'");
        auto [e, r] = parse_term(trimmed);
        result += Coefficient::z_term(r, e);
    }
    return result;
}

}  // namespace kgs
