#include "kgs/coefficient.hpp"

#include <random>

#include "doctest.h"

using kgs::Coefficient;
using kgs::Rational;

TEST_CASE("rational addition") {
    Coefficient a = kgs::make_rational(1, 2);
    Coefficient b = kgs::make_rational(1, 3);
    CHECK((a + b) == Coefficient(kgs::make_rational(5, 6)));
}

TEST_CASE("parse and print round trip") {
    const char* samples[] = {"0", "1", "-1", "5/6", "-3/128*z + 31/725760", "z", "-z", "2*z^2",
                             "1/2 - 1/3*z"};
    for (const char* s : samples) {
        Coefficient c = kgs::parse_coefficient(s);
        CHECK(kgs::parse_coefficient(c.to_string()) == c);
    }
    CHECK(kgs::parse_coefficient("31/725760 - 3/128*z").to_string() == "31/725760 - 3/128*z");
}

TEST_CASE("multiplication by zero annihilates") {
    Coefficient c = kgs::parse_coefficient("-3/128*z + 31/725760");
    CHECK((c * Coefficient(0)).is_zero());
    CHECK((c * Rational(0)).is_zero());
}

TEST_CASE("ring law on binomials") {
    // (a + b z)(c + d z) = ac + (ad+bc) z + bd z^2
    Rational a(2, 3), b(-1, 5), c(7, 2), d(4);
    Coefficient lhs = (Coefficient(a) + Coefficient::z_term(b, 1)) *
                      (Coefficient(c) + Coefficient::z_term(d, 1));
    Coefficient rhs = Coefficient(a * c) + Coefficient::z_term(a * d + b * c, 1) +
                      Coefficient::z_term(b * d, 2);
    CHECK(lhs == rhs);
}

TEST_CASE("slice") {
    CHECK(Coefficient(kgs::make_rational(5, 6)).slice(0) == kgs::make_rational(5, 6));
    CHECK(Coefficient(kgs::make_rational(5, 6)).slice(1) == 0);
    Coefficient c = kgs::parse_coefficient("-3/128*z + 31/725760");
    CHECK(c.slice(1) == kgs::make_rational(-3, 128));
    CHECK(c.slice(0) == kgs::make_rational(31, 725760));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12), exp(0, 2);
    auto random_coeff = [&] {
        Coefficient c;
        for (int t = 0; t < 3; ++t)
            c += Coefficient::z_term(kgs::make_rational(num(rng), den(rng)), exp(rng));
        return c;
    };
    for (int i = 0; i < 200; ++i) {
        Coefficient a = random_coeff(), b = random_coeff(), c = random_coeff();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        // slice is additive at every exponent
        for (unsigned e = 0; e <= 4; ++e) CHECK((a + b).slice(e) == a.slice(e) + b.slice(e));
    }
}
