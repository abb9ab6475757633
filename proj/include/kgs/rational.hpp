#ifndef KGS_RATIONAL_HPP
#define KGS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgs {

/// Exact rational number; always stored in lowest terms with positive denominator.
using Rational = mpq_class;

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class graph_error : public std::runtime_error {
public:
    explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" in decimal.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(s.begin());  // gmp rejects a leading '+'
    if (s.empty()) throw parse_error("empty rational");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw parse_error("bad character in rational: '" + s + "'");
    try {
        Rational r(s);
        if (r.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: '" + s + "'");
    }
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace kgs

#endif
