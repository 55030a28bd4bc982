#pragma once

#include <random>

#include "braidosc/coeff_io.hpp"
#include "braidosc/oscillator.hpp"

namespace testutil {

using namespace braidosc;

inline Poly random_poly(std::mt19937& rng, std::size_t nvars, int max_terms = 3,
                        int max_deg = 2, int max_coeff = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    Poly p(nvars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Mono m(nvars);
        for (auto& e : m) e = deg(rng);
        p.add_term(m, coeff(rng));
    }
    return p;
}

inline RatFunc random_ratfunc(std::mt19937& rng, const TablePtr& table) {
    Poly num = random_poly(rng, table->size());
    Poly den(table->size());
    while (den.is_zero()) den = random_poly(rng, table->size(), 2, 1, 3);
    return RatFunc::from_polys(table, num, den);
}

inline Rat random_rat(std::mt19937& rng, int max_abs = 6) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    return Rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937& rng, int max_abs = 6) {
    Rat r(0);
    while (r == 0) r = random_rat(rng, max_abs);
    return r;
}

inline Word random_word(std::mt19937& rng, int max_len, bool with_inverse = false) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, with_inverse ? 4 : 3);
    static const Gen gens[5] = {Gen::One, Gen::AStar, Gen::QN, Gen::A, Gen::QNInv};
    Word w;
    int n = len(rng);
    for (int t = 0; t < n; ++t) w.push_back(gens[pick(rng)]);
    return w;
}

inline NormalMonomial random_mono(std::mt19937& rng, int max_exp = 2) {
    std::uniform_int_distribution<int> e(0, max_exp);
    return NormalMonomial{e(rng), e(rng), e(rng)};
}

template <class K>
inline Element<K> random_element(std::mt19937& rng, const K& sample, int max_terms = 3,
                                 int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Element<K> e;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        e.add(random_mono(rng, max_exp), int_like(sample, coeff(rng)));
    return e;
}

}  // namespace testutil

#include "braidosc/hopf.hpp"

namespace testutil {

// Hand-built first-type solution 1, independent of the catalog file:
// aa* - Q1 a*a = q^{2N} with k1 = -1, b1 = 1, b2 = (q^2-Q1)/Q1, b3 = Q1,
// z = q^2/Q1, c1 = -q^2/Q1^2, c2 = q^2/Q1^2, d1 = q/Q1, f1 = q,
// f2 = (q^2-Q1)/Q1, g1 = q^2/Q1, the rest forced to zero.
template <class K>
inline Structure<K> fib1_sol1(const K& q, const K& Q1) {
    const K zero = zero_like(q);
    const K one = one_like(q);
    Structure<K> s;
    s.osc = {q, Q1, one, zero, zero, false};
    s.consts = {zero, zero, zero, one,  one,  zero,   // A1..A6
                zero, zero, one,  one,                // B1..B4
                zero, zero,                           // e1, e2
                -one, zero, zero, zero,               // k1..k4
                zero, -one, zero, zero};              // m1..m4
    K q2 = q * q;
    s.braid.g1 = q2 / Q1;
    s.braid.g2 = zero;
    s.braid.g3 = zero;
    s.braid.g4 = zero;
    s.braid.g5 = zero;
    s.braid.g6 = zero;
    s.braid.d1 = q / Q1;
    s.braid.d2 = zero;
    s.braid.d3 = zero;
    s.braid.d4 = zero;
    s.braid.f1 = q;
    s.braid.f2 = (q2 - Q1) / Q1;
    s.braid.f3 = zero;
    s.braid.f4 = zero;
    s.braid.z = q2 / Q1;
    s.braid.b1 = one;
    s.braid.b2 = (q2 - Q1) / Q1;
    s.braid.b3 = Q1;
    s.braid.b4 = zero;
    s.braid.b5 = zero;
    s.braid.b6 = zero;
    s.braid.c1 = -q2 / (Q1 * Q1);
    s.braid.c2 = q2 / (Q1 * Q1);
    s.braid.c3 = zero;
    s.braid.c4 = zero;
    s.braid.c5 = zero;
    s.braid.c6 = zero;
    return s;
}

inline Structure<Rat> fib1_sol1_rat() { return fib1_sol1(Rat(2), Rat(9, 4)); }

inline Structure<RatFunc> fib1_sol1_sym() {
    TablePtr t = make_table({"q", "s"}, {{"Q1", "s"}});
    RatFunc q = RatFunc::indeterminate(t, "q");
    RatFunc s = RatFunc::indeterminate(t, "s");
    return fib1_sol1(q, s * s);
}

template <class K>
inline Tensor<K> random_tensor(std::mt19937& rng, const K& sample, int arity,
                               int max_terms = 2, int max_exp = 1) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Tensor<K> t(arity);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        typename Tensor<K>::Key key;
        for (int s = 0; s < arity; ++s) key.push_back(random_mono(rng, max_exp));
        t.add(key, int_like(sample, coeff(rng)));
    }
    return t;
}

}  // namespace testutil
