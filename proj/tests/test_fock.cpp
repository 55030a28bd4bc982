#include <catch2/catch_amalgamated.hpp>

#include "braidosc/fock.hpp"
#include "test_util.hpp"

using namespace braidosc;

namespace {

FockConfig cfg_of(FockFamily fam, Rat q, Rat Q1, int levels = 8,
                  FockGauge gauge = FockGauge::Exact) {
    FockConfig c;
    c.family = fam;
    c.q = q;
    c.Q1 = Q1;
    c.levels = levels;
    c.gauge = gauge;
    return c;
}

}  // namespace

TEST_CASE("occupation numbers from the closed forms") {
    // first type at q=2, Q1=3: [2] = (9-16)/(3-4) = 7
    CHECK(occupation(2, cfg_of(FockFamily::Type1, Rat(2), Rat(3))) == 7);
    CHECK(occupation(0, cfg_of(FockFamily::Type1, Rat(2), Rat(3))) == 0);
    // first-type one-parameter case at q=2: [2] = (16-1/16)/(4-1/4) = 17/4
    CHECK(occupation(2, cfg_of(FockFamily::BM1, Rat(2), Rat(0))) == Rat(17, 4));
    // second type at q=2, Q1=3: [3] = (27-8)/(3-2) = 19
    CHECK(occupation(3, cfg_of(FockFamily::Type2, Rat(2), Rat(3))) == 19);
}

TEST_CASE("closed form equals the recursion for random parameters") {
    std::mt19937 rng(1001);
    const FockFamily fams[4] = {FockFamily::Type1, FockFamily::Type2, FockFamily::BM1,
                                FockFamily::BM2};
    for (FockFamily fam : fams) {
        int done = 0;
        while (done < 6) {
            Rat q = testutil::random_nonzero_rat(rng, 5);
            Rat Q1 = testutil::random_nonzero_rat(rng, 5);
            FockConfig c = cfg_of(fam, q, Q1);
            Rat base = c.second_type() ? q : q * q;
            if (c.effective_Q1() == base) continue;
            ++done;
            Rat rec(0);
            for (int n = 0; n <= 32; ++n) {
                CHECK(occupation(n, c) == rec);
                rec = c.effective_Q1() * rec + rat_pow(q, c.second_type() ? n : 2 * n);
            }
        }
    }
}

TEST_CASE("fibonacci two-term recurrence") {
    std::mt19937 rng(2002);
    for (int trial = 0; trial < 5; ++trial) {
        Rat q = testutil::random_nonzero_rat(rng, 4);
        Rat Q1 = testutil::random_nonzero_rat(rng, 4);
        if (Q1 == q * q || Q1 == q) continue;
        FockConfig c1 = cfg_of(FockFamily::Type1, q, Q1);
        FockConfig c2 = cfg_of(FockFamily::Type2, q, Q1);
        for (int n = 1; n <= 32; ++n) {
            // [n+1] = (q^2 + Q1)[n] - q^2 Q1 [n-1] for the first type
            CHECK(occupation(n + 1, c1) ==
                  (q * q + Q1) * occupation(n, c1) - q * q * Q1 * occupation(n - 1, c1));
            // and with q in place of q^2 for the second type
            CHECK(occupation(n + 1, c2) ==
                  (q + Q1) * occupation(n, c2) - q * Q1 * occupation(n - 1, c2));
        }
    }
}

TEST_CASE("the q = p limit of the first type is the one-parameter oscillator") {
    Rat q(3, 2);
    FockConfig general = cfg_of(FockFamily::Type1, q, Rat(1) / (q * q));
    FockConfig bm = cfg_of(FockFamily::BM1, q, Rat(0));
    for (int n = 0; n <= 32; ++n) CHECK(occupation(n, general) == occupation(n, bm));
}

TEST_CASE("degenerate denominators") {
    FockConfig c = cfg_of(FockFamily::Type1, Rat(2), Rat(4));  // Q1 = q^2
    CHECK_THROWS_AS(occupation(3, c), DomainError);
    CHECK(occupation(3, c, true) == Rat(3) * rat_pow(Rat(4), 2));  // n q^{2(n-1)}
    FockConfig c2 = cfg_of(FockFamily::Type2, Rat(2), Rat(2));
    CHECK_THROWS_AS(occupation(5, c2), DomainError);
    CHECK(occupation(5, c2, true) == Rat(5) * rat_pow(Rat(2), 4));
}

TEST_CASE("matrices in the exact gauge") {
    FockConfig c = cfg_of(FockFamily::Type1, Rat(2), Rat(3), 4);
    FockMatrices m = build_matrices(c);
    // q^N diagonal = (1, q, q^2, ..., q^L)
    for (int n = 0; n <= 4; ++n) CHECK(m.qn[n][n] == rat_pow(Rat(2), n));
    // a|0> = 0
    for (int i = 0; i <= 4; ++i) CHECK(m.a[i][0] == 0);
    // aa* - 3 a*a restricted to |0>,|1>,|2> equals diag(1, 4, 16) = q^{2N}
    auto aas = detail::mat_mul(m.a, m.astar);
    auto asa = detail::mat_mul(m.astar, m.a);
    for (int j = 0; j <= 2; ++j) {
        for (int i = 0; i <= 4; ++i) {
            Rat want = (i == j) ? rat_pow(Rat(4), j) : Rat(0);
            CHECK(aas[i][j] - Rat(3) * asa[i][j] == want);
        }
    }
}

TEST_CASE("relation residuals") {
    {
        FockConfig c = cfg_of(FockFamily::Type1, Rat(2), Rat(3), 8);
        FockResidual r = relation_residual(c);
        CHECK(r.interior_exact == 0);
        CHECK(r.boundary_exact > 0);  // truncation artifact at |L>
    }
    {
        FockConfig c = cfg_of(FockFamily::Type2, Rat(3, 2), Rat(5, 2), 10);
        CHECK(relation_residual(c).interior_exact == 0);
    }
    {
        FockConfig c = cfg_of(FockFamily::Type1, Rat(2), Rat(3), 16, FockGauge::Hermitian);
        FockResidual r = relation_residual(c);
        CHECK(r.interior < 1e-12);
        CHECK(r.boundary > 1e-6);  // the artifact stays visibly nonzero
    }
}

TEST_CASE("q^N a* = q a* q^N holds exactly in both gauges") {
    FockConfig c = cfg_of(FockFamily::Type1, Rat(2), Rat(3), 12);
    {
        FockMatrices m = build_matrices(c);
        auto lhs = detail::mat_mul(m.qn, m.astar);
        auto rhs = detail::mat_mul(m.astar, m.qn);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            for (std::size_t j = 0; j < lhs.size(); ++j)
                CHECK(lhs[i][j] == Rat(2) * rhs[i][j]);
    }
    {
        c.gauge = FockGauge::Hermitian;
        FockMatrices m = build_matrices(c);
        auto lhs = detail::mat_mul(m.qnf, m.astarf);
        auto rhs = detail::mat_mul(m.astarf, m.qnf);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            for (std::size_t j = 0; j < lhs.size(); ++j)
                CHECK(lhs[i][j] == 2.0 * rhs[i][j]);
    }
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS_AS(occupation(2, cfg_of(FockFamily::Type1, Rat(2), Rat(3), 0)), DomainError);
    CHECK_THROWS_AS(build_matrices(cfg_of(FockFamily::Type1, Rat(0), Rat(3))), DomainError);
    // negative occupation in the hermitian gauge: Q1 = -5 gives [2] = -1
    FockConfig c = cfg_of(FockFamily::Type1, Rat(2), Rat(-5), 4, FockGauge::Hermitian);
    CHECK_THROWS_AS(build_matrices(c), DomainError);
}
