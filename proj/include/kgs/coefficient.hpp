#ifndef KGS_COEFFICIENT_HPP
#define KGS_COEFFICIENT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgs/rational.hpp"

namespace kgs {

/// Element of Q[z], where z stands for the transcendental constant
/// zeta(3)^2/pi^6 that enters graph weights from order 6 onward.
///
/// Terms are kept sorted by exponent; zero rationals are never stored.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(const Rational& r) { set_term(0, r); }  // NOLINT: implicit by design
    Coefficient(long n) { set_term(0, make_rational(n)); }

    static Coefficient z_term(const Rational& r, unsigned exponent) {
        Coefficient c;
        c.set_term(exponent, r);
        return c;
    }

    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const { return terms_.empty() ? 0 : terms_.back().first; }

    /// The coefficient of z^exponent.
    Rational slice(unsigned exponent) const;

    const std::vector<std::pair<unsigned, Rational>>& terms() const { return terms_; }

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient operator-() const;
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient& operator*=(const Rational& r);
    friend Coefficient operator*(Coefficient a, const Rational& r) { return a *= r; }

    friend bool operator==(const Coefficient& a, const Coefficient& b) = default;

    /// Substitutes a rational value for z.
    Rational evaluate_z(const Rational& z_value) const;

    std::string to_string() const;

private:
    void set_term(unsigned exponent, const Rational& r);

    std::vector<std::pair<unsigned, Rational>> terms_;
};

/// Parses the file form of a coefficient: sums of `p/q` and `p/q*z^e`
/// joined by '+'/'-', e.g. "-3/128*z + 31/725760".
Coefficient parse_coefficient(std::string_view text);

}  // namespace kgs

#endif
