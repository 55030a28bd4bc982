#include <catch2/catch_amalgamated.hpp>

#include "braidosc/catalog.hpp"
#include "test_util.hpp"

using namespace braidosc;

namespace {
const Catalog& cat() {
    static Catalog c = Catalog::load_file(BRAIDOSC_DEFAULT_CATALOG);
    return c;
}
}  // namespace

TEST_CASE("catalog loads with the expected shape") {
    CHECK(cat().version() == "1");
    CHECK(cat().solutions().size() == 20);
    CHECK(cat().table("1").size() == 6);
    CHECK(cat().table("3").size() == 2);
    CHECK(cat().table("5").size() == 5);
    CHECK(cat().table("4").size() == 7);
    CHECK_THROWS_AS(cat().solution("1", "sol9"), DomainError);
}

TEST_CASE("catalog entry spot checks") {
    {
        const HopfSolution& s = cat().solution("1", "sol4");
        // b1 = Q1/q^2
        CHECK(s.value("b1") == parse_coeff("Q1/q^2", s.indets));
        CHECK(s.value("k1") == parse_coeff("-1", s.indets));
    }
    {
        const HopfSolution& s = cat().solution("4", "sol1");
        // A3 = -q A2
        RatFunc q = RatFunc::indeterminate(s.indets, "q");
        RatFunc A2 = RatFunc::indeterminate(s.indets, "A2");
        CHECK(s.value("A3") == -q * A2);
        CHECK(s.free_symbols == std::vector<std::string>{"A2"});
    }
    {
        const HopfSolution& s = cat().solution("5", "sol5");
        RatFunc q = RatFunc::indeterminate(s.indets, "q");
        CHECK(s.value("Q1") == -q);
        CHECK(s.value("Q2").is_zero());
        CHECK(s.value("Q3") == one_like(q));
        CHECK(s.value("z") == -one_like(q));
    }
}

TEST_CASE("catalog first-type solution 1 matches the hand-built structure") {
    const HopfSolution& s = cat().solution("1", "sol1");
    Structure<RatFunc> from_file = s.structure();
    Structure<RatFunc> by_hand = testutil::fib1_sol1_sym();
    CHECK(from_file.osc.Q1 == by_hand.osc.Q1);
    CHECK(from_file.braid == by_hand.braid);
    CHECK(from_file.consts == by_hand.consts);

    Structure<Rat> inst = s.instantiate({{"q", Rat(2)}, {"Q1", Rat(9, 4)}});
    CHECK(inst == testutil::fib1_sol1_rat());
    // assigning s directly works too
    CHECK(s.instantiate({{"q", Rat(2)}, {"s", Rat(3, 2)}}) == testutil::fib1_sol1_rat());
    CHECK(s.instantiate_default() == testutil::fib1_sol1_rat());
}

TEST_CASE("entries round-trip through print and parse") {
    for (const auto& s : cat().solutions()) {
        for (const auto& [name, v] : s.values) {
            CHECK(parse_coeff(print_coeff(v), s.indets) == v);
            CHECK(parse_coeff(print_coeff(v, true), s.indets) == v);
        }
    }
}

TEST_CASE("numeric assignment resolution") {
    const HopfSolution& s = cat().solution("1", "sol2");
    CHECK_THROWS_AS(s.instantiate({{"q", Rat(2)}, {"Q1", Rat(3)}}), EvalError);  // sqrt(3)
    CHECK_THROWS_AS(s.instantiate({{"q", Rat(2)}}), EvalError);                  // missing
    CHECK_THROWS_AS(s.instantiate({{"q", Rat(2)}, {"s", Rat(3, 2)}, {"zz", Rat(1)}}),
                    EvalError);  // unknown symbol
}

TEST_CASE("specialization to the one-parameter oscillators") {
    // First type at Q1 = q^-2: s -> q^-1.
    HopfSolution bm = specialize(cat().solution("1", "sol1"), "Q1", "q^-2");
    CHECK(bm.indets->size() == 1);
    RatFunc q = RatFunc::indeterminate(bm.indets, "q");
    CHECK(bm.value("Q1") == one_like(q) / (q * q));
    CHECK(bm.value("z") == q.pow(4));  // q^2/Q1 = q^4
    CHECK(bm.provenance() == "table1/sol1[Q1=q^-2]");

    auto all_bm1 = derived_solutions(cat(), "bm1");
    CHECK(all_bm1.size() == 6);
    auto all_bm2 = derived_solutions(cat(), "bm2");
    CHECK(all_bm2.size() == 2);
    auto lit = derived_solutions(cat(), "lit");
    REQUIRE(lit.size() == 1);
    RatFunc lq = RatFunc::indeterminate(lit[0].indets, "q");
    CHECK(lit[0].value("z") == lq * lq);       // z = g1 = q^2
    CHECK(lit[0].value("b2") == lq * lq - one_like(lq));
    CHECK(lit[0].free_symbols.empty());

    CHECK_THROWS_AS(specialize(cat().solution("1", "sol1"), "Q1", "q^3"), DomainError);
    CHECK_THROWS_AS(specialize(cat().solution("1", "sol1"), "nope", "1"), DomainError);
}

TEST_CASE("override replaces one constant") {
    HopfSolution s = override_constant(cat().solution("1", "sol1"), "b3", "1");
    CHECK(s.value("b3") == one_like(s.q()));
    CHECK(s.provenance() == "table1/sol1[b3:=1]");
}

TEST_CASE("catalog validation rejects malformed input") {
    CHECK_THROWS_AS(Catalog::load_string("{not json"), DomainError);
    CHECK_THROWS_AS(Catalog::load_string(R"({"catalog_version":"2","defaults":{},"tables":[]})"),
                    DomainError);
    // unknown key
    CHECK_THROWS_AS(Catalog::load_string(
                        R"({"catalog_version":"1","defaults":{},"tables":[],"extra":1})"),
                    DomainError);
    // missing constants
    std::string missing = R"({
      "catalog_version": "1",
      "defaults": {},
      "tables": [{
        "id": "t", "name": "x", "indeterminates": ["q"],
        "default_assignment": {"q": "2"},
        "solutions": [{"id": "s1", "constants": {"z": "1"}}]
      }]
    })";
    CHECK_THROWS_AS(Catalog::load_string(missing), DomainError);
    // unparseable constant
    std::string bad = R"({
      "catalog_version": "1",
      "defaults": {},
      "tables": [{
        "id": "t", "name": "x", "indeterminates": ["q"],
        "default_assignment": {"q": "2"},
        "solutions": [{"id": "s1", "constants": {"z": "q+"}}]
      }]
    })";
    CHECK_THROWS_AS(Catalog::load_string(bad), DomainError);
    // unknown constant name
    std::string unknown = R"({
      "catalog_version": "1",
      "defaults": {},
      "tables": [{
        "id": "t", "name": "x", "indeterminates": ["q"],
        "default_assignment": {"q": "2"},
        "solutions": [{"id": "s1", "constants": {"w9": "1"}}]
      }]
    })";
    CHECK_THROWS_AS(Catalog::load_string(unknown), DomainError);
}

TEST_CASE("default assignments avoid the degeneracies") {
    for (const auto& s : cat().solutions()) {
        auto a = s.resolve_assignment(s.default_assignment);
        Structure<Rat> inst = s.instantiate(s.default_assignment);
        CHECK(inst.osc.q != 0);
        CHECK(inst.osc.Q1 != 0);
    }
}
