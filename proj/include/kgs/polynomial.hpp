#ifndef KGS_POLYNOMIAL_HPP
#define KGS_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kgs/rational.hpp"

namespace kgs {

/// Sparse multivariate polynomial over Q in variables x1..xd.
class Polynomial {
public:
    using Monomial = std::vector<unsigned>;  // exponent vector of length dim

    explicit Polynomial(int dim) : dim_(dim) {}
    static Polynomial constant(int dim, const Rational& r);
    static Polynomial variable(int dim, int index);  // x_{index+1}

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Rational& r);
    friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative(int var) const;

    /// Substitutes x_i -> x_i + shift_i (polynomial translation).
    Polynomial translated(const std::vector<Rational>& shift) const;

    void add_term(const Monomial& mono, const Rational& r);

    std::string to_string() const;

private:
    int dim_;
    std::map<Monomial, Rational> terms_;
};

/// Parses sums of terms like "3/2*x1^2*x3", "-x2", "1/2" over x1..xd.
Polynomial parse_polynomial(int dim, std::string_view text);

}  // namespace kgs

#endif
