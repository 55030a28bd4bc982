#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace braidosc;

namespace {

Tensor<Rat> pair_of(Gen x, Gen y) {
    Tensor<Rat> t(2);
    t.add({mono_of(x), mono_of(y)}, Rat(1));
    return t;
}

}  // namespace

TEST_CASE("braiding unit rules") {
    auto s = testutil::fib1_sol1_rat();
    Braiding<Rat> psi(s.osc, s.braid);
    Tensor<Rat> want(2);
    want.add({mono_of(Gen::A), mono_one()}, Rat(1));
    CHECK(psi.braid_mono(mono_one(), mono_of(Gen::A)) == want);
    Tensor<Rat> want2(2);
    want2.add({mono_one(), mono_of(Gen::A)}, Rat(1));
    CHECK(psi.braid_mono(mono_of(Gen::A), mono_one()) == want2);
}

TEST_CASE("braiding on generator pairs") {
    auto s = testutil::fib1_sol1_sym();
    Braiding<RatFunc> psi(s.osc, s.braid);

    // psi(a (x) a) = z a (x) a
    Tensor<RatFunc> aa(2);
    aa.add({mono_of(Gen::A), mono_of(Gen::A)}, s.braid.z);
    CHECK(psi.braid_mono(mono_of(Gen::A), mono_of(Gen::A)) == aa);

    // psi(a (x) a*) = 1 q^N (x) q^N + (q^2-Q1)/Q1 a (x) a* + Q1 a* (x) a
    Tensor<RatFunc> aas(2);
    aas.add({mono_of(Gen::QN), mono_of(Gen::QN)}, s.braid.b1);
    aas.add({mono_of(Gen::A), mono_of(Gen::AStar)}, s.braid.b2);
    aas.add({mono_of(Gen::AStar), mono_of(Gen::A)}, s.braid.b3);
    CHECK(psi.braid_mono(mono_of(Gen::A), mono_of(Gen::AStar)) == aas);
}

TEST_CASE("tensor product multiplication") {
    auto s = testutil::fib1_sol1_rat();
    Braiding<Rat> psi(s.osc, s.braid);
    Rat one(1);

    Tensor<Rat> a2 = pair_of(Gen::One, Gen::A);   // 1 (x) a
    Tensor<Rat> a1 = pair_of(Gen::A, Gen::One);   // a (x) 1
    Tensor<Rat> s1 = pair_of(Gen::AStar, Gen::One);

    // a_2 a_1 = z a_1 a_2
    Tensor<Rat> want(2);
    want.add({mono_of(Gen::A), mono_of(Gen::A)}, s.braid.z);
    CHECK(tensor_mul(a2, a1, psi) == want);

    // a_1 a_2 needs no braiding
    Tensor<Rat> plain(2);
    plain.add({mono_of(Gen::A), mono_of(Gen::A)}, one);
    CHECK(tensor_mul(a1, a2, psi) == plain);

    // (1 (x) a)(a* (x) 1) = psi(a (x) a*)
    CHECK(tensor_mul(a2, s1, psi) ==
          psi.braid_mono(mono_of(Gen::A), mono_of(Gen::AStar)));
}

TEST_CASE("flip is an involution and matches the permutation") {
    std::mt19937 rng(808);
    Tensor<Rat> t = pair_of(Gen::A, Gen::AStar);
    CHECK(flip(t) == pair_of(Gen::AStar, Gen::A));
    CHECK(flip(pair_of(Gen::QN, Gen::One)) == pair_of(Gen::One, Gen::QN));
    for (int trial = 0; trial < 50; ++trial) {
        Tensor<Rat> r = testutil::random_tensor(rng, Rat(1), 2, 4, 2);
        CHECK(flip(flip(r)) == r);
    }
    Tensor<Rat> three(3);
    three.add({mono_one(), mono_one(), mono_one()}, Rat(1));
    CHECK_THROWS_AS(flip(three), DomainError);
}

TEST_CASE("hexagon peel strategies agree") {
    auto s = testutil::fib1_sol1_rat();
    Braiding<Rat> left(s.osc, s.braid, PeelStrategy::LeftFirst);
    Braiding<Rat> right(s.osc, s.braid, PeelStrategy::RightFirst);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        NormalMonomial m1 = testutil::random_mono(rng, 2);
        NormalMonomial m2 = testutil::random_mono(rng, 2);
        REQUIRE(left.braid_mono(m1, m2) == right.braid_mono(m1, m2));
    }
}

TEST_CASE("yang-baxter holds for the first-type solution symbolically") {
    auto s = testutil::fib1_sol1_sym();
    Braiding<RatFunc> psi(s.osc, s.braid);
    const Gen gens[3] = {Gen::AStar, Gen::QN, Gen::A};
    for (Gen x : gens)
        for (Gen y : gens)
            for (Gen z : gens) {
                Tensor<RatFunc> t(3);
                t.add({mono_of(x), mono_of(y), mono_of(z)}, one_like(s.osc.q));
                Tensor<RatFunc> lhs =
                    braid_slots(braid_slots(braid_slots(t, 0, psi), 1, psi), 0, psi);
                Tensor<RatFunc> rhs =
                    braid_slots(braid_slots(braid_slots(t, 1, psi), 0, psi), 1, psi);
                REQUIRE(lhs == rhs);
            }
}

TEST_CASE("permutation braiding gives the componentwise product") {
    // With psi = pi the braided product must reduce to slotwise
    // multiplication, whatever the oscillator parameters are.
    OscillatorParams<Rat> osc{Rat(2), Rat(5, 3), Rat(2), Rat(1, 2), Rat(3), false};
    Braiding<Rat> psi(osc, BraidTable<Rat>::flip_table(Rat(1)));
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        Element<Rat> x1 = testutil::random_element(rng, Rat(1), 2, 2);
        Element<Rat> x2 = testutil::random_element(rng, Rat(1), 2, 2);
        Element<Rat> y1 = testutil::random_element(rng, Rat(1), 2, 2);
        Element<Rat> y2 = testutil::random_element(rng, Rat(1), 2, 2);
        Tensor<Rat> lhs = tensor_mul(Tensor<Rat>::outer({x1, x2}),
                                     Tensor<Rat>::outer({y1, y2}), psi);
        Tensor<Rat> rhs =
            Tensor<Rat>::outer({mul(x1, y1, osc), mul(x2, y2, osc)});
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("3-fold braided associativity, numeric") {
    auto s = testutil::fib1_sol1_rat();
    Braiding<Rat> psi(s.osc, s.braid);
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        Tensor<Rat> x = testutil::random_tensor(rng, Rat(1), 3, 2, 1);
        Tensor<Rat> y = testutil::random_tensor(rng, Rat(1), 3, 2, 1);
        Tensor<Rat> z = testutil::random_tensor(rng, Rat(1), 3, 2, 1);
        REQUIRE(tensor_mul(tensor_mul(x, y, psi), z, psi) ==
                tensor_mul(x, tensor_mul(y, z, psi), psi));
    }
}

TEST_CASE("arity mismatch is rejected") {
    auto s = testutil::fib1_sol1_rat();
    Braiding<Rat> psi(s.osc, s.braid);
    Tensor<Rat> two(2), three(3);
    two.add({mono_one(), mono_one()}, Rat(1));
    three.add({mono_one(), mono_one(), mono_one()}, Rat(1));
    CHECK_THROWS_AS(tensor_mul(two, three, psi), DomainError);
}

TEST_CASE("exchange relations") {
    auto s = testutil::fib1_sol1_rat();
    Braiding<Rat> psi(s.osc, s.braid);
    auto rels = exchange_relations<Rat>(psi);
    REQUIRE(rels.size() == 9);

    // a_2 a_1 = z a_1 a_2 with z = q^2/Q1 = 16/9 at q=2, Q1=9/4
    bool found = false;
    for (const auto& r : rels) {
        if (r.x == Gen::A && r.y == Gen::A) {
            CHECK(r.lhs == "a2 a1");
            CHECK(r.rhs == "(16/9)\xc2\xb7"
                           "a1 a2");
            found = true;
        }
        if (r.x == Gen::A && r.y == Gen::AStar) {
            // b1 q1^N q2^N + b2 a1 a2* + b3 a1* a2
            CHECK(r.lhs == "a2 a1*");
            CHECK(r.rhs.find("q1^N q2^N") != std::string::npos);
            CHECK(r.rhs.find("a1* a2") != std::string::npos);
        }
    }
    CHECK(found);
}
