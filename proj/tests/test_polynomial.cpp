#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace braidosc;

TEST_CASE("polynomial arithmetic basics") {
    // two variables x, y
    Poly x = Poly::variable(2, 0);
    Poly y = Poly::variable(2, 1);
    Poly p = (x + y) * (x - y);
    Poly expect = x * x - y * y;
    CHECK(p == expect);
    CHECK((p - p).is_zero());
    CHECK(p.degree_in(0) == 2);
    CHECK(p.total_degree() == 2);

    Poly c = Poly::constant(2, 7);
    CHECK(c.is_constant());
    CHECK(c.constant_value() == 7);
}

TEST_CASE("exact division and gcd") {
    Poly x = Poly::variable(2, 0);
    Poly y = Poly::variable(2, 1);

    Poly a = (x + y) * (x - y);        // x^2 - y^2
    Poly b = (x + y) * (x + y);        // (x+y)^2
    CHECK(poly_gcd(a, b) == x + y);

    CHECK(exact_div(a, x + y) == x - y);
    CHECK_THROWS_AS(exact_div(a, x), DomainError);

    // content handling: gcd includes the integer content
    Poly two_x = x.scaled(2);
    Poly four_y = y.scaled(4);
    CHECK(poly_gcd(two_x * y, four_y * x) == (x * y).scaled(2));

    // sign convention: leading coefficient positive
    CHECK(poly_gcd(-a, -a) == a);

    CHECK(poly_gcd(Poly(2), a) == a);
    CHECK(poly_gcd(a, Poly(2)) == a);
}

TEST_CASE("gcd property on random products") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = testutil::random_poly(rng, 3);
        Poly b = testutil::random_poly(rng, 3);
        Poly c = testutil::random_poly(rng, 3);
        if (c.is_zero()) continue;
        Poly g = poly_gcd(a * c, b * c);
        if ((a * c).is_zero() && (b * c).is_zero()) continue;
        // c divides gcd(ac, bc)
        CHECK_NOTHROW(exact_div(g, poly_gcd(g, c)));
        Poly r = exact_div(g, poly_gcd(g, c));
        (void)r;
        CHECK_NOTHROW(exact_div(a * c, g));
        CHECK_NOTHROW(exact_div(b * c, g));
    }
}

TEST_CASE("polynomial evaluation") {
    Poly x = Poly::variable(2, 0);
    Poly y = Poly::variable(2, 1);
    Poly p = x * x - y * y;
    CHECK(p.evaluate({Rat(3), Rat(2)}) == Rat(5));
    CHECK(p.evaluate({Rat(1, 2), Rat(1, 3)}) == Rat(1, 4) - Rat(1, 9));
}
