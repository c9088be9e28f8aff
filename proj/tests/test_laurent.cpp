#include "doctest.h"

#include "cellweb/laurent.hpp"

#include <random>

using namespace cellweb;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coeff(-9, 9);
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

} // namespace

TEST_CASE("laurent basic arithmetic") {
    LaurentPoly v = LaurentPoly::v(1), one(1);
    CHECK((v + one).str() == "v + 1");
    CHECK((v * v).str() == "v^2");
    CHECK((v - v).is_zero());
    CHECK((v + LaurentPoly(2) + LaurentPoly::v(-1)).str() == "v + 2 + v^-1");
    CHECK((LaurentPoly(3) * LaurentPoly::v(2)).str() == "3*v^2");
    CHECK((-(LaurentPoly::vhalf(1) + LaurentPoly::vhalf(-1))).str() == "-v^(1/2) - v^(-1/2)");
}

TEST_CASE("laurent ring axioms on random polynomials") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + LaurentPoly() == a);
        CHECK(a * LaurentPoly(1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("bar involution") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
    CHECK(LaurentPoly::vhalf(1).bar() == LaurentPoly::vhalf(-1));
}

TEST_CASE("str/parse round trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng);
        CHECK(LaurentPoly::parse(a.str()) == a);
    }
    CHECK(LaurentPoly::parse("0").is_zero());
    CHECK(LaurentPoly::parse("v + 1") == LaurentPoly::v(1) + LaurentPoly(1));
    CHECK(LaurentPoly::parse("q^2 - q") == LaurentPoly::v(2) - LaurentPoly::v(1));
    CHECK(LaurentPoly::parse("v^(1/2)") == LaurentPoly::vhalf(1));
    CHECK(LaurentPoly::parse("2*v^(-3/2) + 5") ==
          LaurentPoly::monomial(2, -3) + LaurentPoly(5));
    CHECK_THROWS_AS((void)LaurentPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS((void)LaurentPoly::parse("v^"), std::invalid_argument);
    CHECK_THROWS_AS((void)LaurentPoly::parse("x + 1"), std::invalid_argument);
}

TEST_CASE("evaluate") {
    LaurentPoly p = LaurentPoly::v(1) + LaurentPoly(1) + LaurentPoly::v(-1);
    CHECK(p.evaluate(1) == 3);
    CHECK(p.evaluate(-1) == -1);
    CHECK(p.evaluate(Rational(2)) == Rational(7, 2));
    LaurentPoly h = LaurentPoly::vhalf(1);
    CHECK_THROWS_AS((void)h.evaluate(4), std::invalid_argument);
    CHECK(h.evaluate(4, 2) == 2);
    CHECK_THROWS_AS((void)h.evaluate(4, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)p.evaluate(0), std::invalid_argument);
}

TEST_CASE("exponent queries and shifts") {
    LaurentPoly p = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, -4);
    CHECK(p.min_exp() == -4);
    CHECK(p.max_exp() == 3);
    CHECK(p.has_half_exponents());
    CHECK(p.coeff(3) == 2);
    CHECK(p.coeff(0) == 0);
    CHECK(p.shifted(4) == LaurentPoly::monomial(2, 7) + LaurentPoly::monomial(-1, 0));
    CHECK_THROWS_AS((void)LaurentPoly().min_exp(), std::invalid_argument);
}
