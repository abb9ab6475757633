#include "kgs/polynomial.hpp"

#include "doctest.h"
#include "kgs/bivector.hpp"

using kgs::parse_polynomial;
using kgs::Polynomial;

TEST_CASE("polynomial arithmetic basics") {
    auto x1 = Polynomial::variable(3, 0);
    auto x2 = Polynomial::variable(3, 1);
    CHECK((x1 + x2) - x2 == x1);
    CHECK((x1 * x2).derivative(0) == x2);
    CHECK(x1.derivative(1).is_zero());
    auto sq = x1 * x1;
    CHECK(sq.derivative(0) == x1 * kgs::Rational(2));
}

TEST_CASE("parse polynomial") {
    CHECK(parse_polynomial(3, "x1^2") == Polynomial::variable(3, 0) * Polynomial::variable(3, 0));
    CHECK(parse_polynomial(3, "-x2") == -Polynomial::variable(3, 1));
    CHECK(parse_polynomial(3, "3/2*x1*x3 + 1") ==
          Polynomial::variable(3, 0) * Polynomial::variable(3, 2) * kgs::make_rational(3, 2) +
              Polynomial::constant(3, 1));
    CHECK(parse_polynomial(2, "0").is_zero());
    auto p = parse_polynomial(3, "x1^2 - 2/3*x2*x3 + 5");
    CHECK(parse_polynomial(3, p.to_string()) == p);
}

TEST_CASE("translation substitutes shifted variables") {
    auto p = parse_polynomial(2, "x1^2 + x2");
    auto shifted = p.translated({kgs::make_rational(1), kgs::make_rational(-2)});
    CHECK(shifted == parse_polynomial(2, "x1^2 + 2*x1 + x2 - 1"));
}

TEST_CASE("jacobiator of test structures") {
    CHECK(kgs::jacobiator(kgs::so3_bivector()).is_zero());
    CHECK(kgs::jacobiator(kgs::symplectic_2d()).is_zero());
    auto jac = kgs::jacobiator(kgs::nonpoisson_quadratic());
    CHECK(!jac.is_zero());
    // Jac^{123} = x2 - 2 x1 x2 for P^{12}=x1^2, P^{13}=x2, P^{23}=x3
    CHECK(jac.component(0, 1, 2) == parse_polynomial(3, "x2 - 2*x1*x2"));
    // total antisymmetry
    CHECK(jac.component(1, 0, 2) == -jac.component(0, 1, 2));
    CHECK(jac.component(2, 0, 1) == jac.component(0, 1, 2));
    CHECK(jac.component(0, 0, 2).is_zero());

    auto lin = kgs::jacobiator(kgs::nonpoisson_linear());
    CHECK(lin.component(0, 1, 2) == parse_polynomial(3, "x1 - x2 - x3"));
}

TEST_CASE("poisson structure file round trip") {
    std::stringstream buffer;
    kgs::write_poisson_structure(buffer, kgs::so3_bivector());
    auto back = kgs::read_poisson_structure(buffer);
    CHECK(back.dimension() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(back.component(i, j) == kgs::so3_bivector().component(i, j));
}
