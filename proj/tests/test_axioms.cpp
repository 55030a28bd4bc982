#include <catch2/catch_amalgamated.hpp>

#include "braidosc/axioms.hpp"
#include "test_util.hpp"

using namespace braidosc;

TEST_CASE("full axiom check passes for the first-type solution, symbolic") {
    AxiomReport r = check_axioms(testutil::fib1_sol1_sym());
    for (const auto& c : r.checks) {
        INFO(c.family << " on " << c.instance << ": " << c.residual);
        REQUIRE(c.pass);
    }
    CHECK(r.checks.size() > 200);
}

TEST_CASE("full axiom check passes for the first-type solution, numeric") {
    AxiomReport r = check_axioms(testutil::fib1_sol1_rat());
    for (const auto& c : r.checks) {
        INFO(c.family << " on " << c.instance << ": " << c.residual);
        REQUIRE(c.pass);
    }
}

TEST_CASE("a perturbed braiding constant is caught with a residual witness") {
    Structure<Rat> s = testutil::fib1_sol1_rat();
    s.braid.b3 = Rat(1);  // anything other than Q1
    AxiomReport r = check_axioms(s);
    CHECK(!r.all_pass());
    bool witnessed = false;
    for (const auto& c : r.checks)
        if (!c.pass) {
            CHECK(!c.residual.empty());
            witnessed = true;
        }
    CHECK(witnessed);
}

TEST_CASE("the classical limit passes as an ordinary Hopf check") {
    // q = 1, Q1 = 1, Q2 = Q3 = Q4 = 0, psi = pi, primitive coproducts.
    Rat one(1), zero(0);
    Structure<Rat> s;
    s.osc = {one, one, zero, zero, zero, false};
    s.consts = {zero, zero, zero, one, one, zero,
                zero, zero, one, one,
                zero, zero,
                -one, zero, zero, zero,
                zero, -one, zero, zero};
    s.braid = BraidTable<Rat>::flip_table(one);
    AxiomReport r = check_axioms(s);
    for (const auto& c : r.checks) {
        INFO(c.family << " on " << c.instance << ": " << c.residual);
        REQUIRE(c.pass);
    }
}
