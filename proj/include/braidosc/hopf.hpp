#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidosc/braid.hpp"

namespace braidosc {

// Structure constants of the coproduct, counit and antipode ansatz.
template <class K>
struct HopfConstants {
    K A1, A2, A3, A4, A5, A6;  // coproduct of q^N
    K B1, B2, B3, B4;          // coproducts of a and a^*
    K e1, e2;                  // counits
    K k1, k2, k3, k4;          // antipode of q^N
    K m1, m2, m3, m4;          // antipodes of a and a^*

    bool operator==(const HopfConstants&) const = default;
};

// One full braided Hopf structure over the oscillator algebra.
template <class K>
struct Structure {
    OscillatorParams<K> osc;
    HopfConstants<K> consts;
    BraidTable<K> braid;

    bool operator==(const Structure&) const = default;
};

inline NormalMonomial star(const NormalMonomial& m) { return {m.a, m.qn, m.astar}; }

// The involution fixes q^N, swaps a and a^*, reverses products and leaves
// real coefficients alone; on normal monomials it swaps the outer exponents.
template <class K>
Element<K> star(const Element<K>& e) {
    Element<K> out;
    for (const auto& [m, c] : e.terms()) out.add(star(m), c);
    return out;
}

template <class K>
Tensor<K> star(const Tensor<K>& t) {
    Tensor<K> out(t.arity());
    for (const auto& [key, c] : t.terms()) {
        typename Tensor<K>::Key k2(key.rbegin(), key.rend());
        for (auto& m : k2) m = star(m);
        out.add(k2, c);
    }
    return out;
}

// Structure maps extended from the generator values: the coproduct as a
// braided homomorphism, the antipode as a braided anti-homomorphism, the
// counit as an algebra homomorphism. All extensions act on normal-form
// representatives; the axiom checker separately verifies that they descend
// to the quotient by the defining relations.
template <class K>
class HopfMaps {
public:
    explicit HopfMaps(Structure<K> s, PeelStrategy strategy = PeelStrategy::LeftFirst)
        : s_(std::move(s)), psi_(s_.osc, s_.braid, strategy) {}

    const Structure<K>& structure() const { return s_; }
    const Braiding<K>& braiding() const { return psi_; }
    const OscillatorParams<K>& osc() const { return s_.osc; }
    K one() const { return one_like(s_.osc.q); }

    Tensor<K> coproduct_gen(Gen g) const {
        Tensor<K> t(2);
        const auto& c = s_.consts;
        const NormalMonomial A = mono_of(Gen::A), S = mono_of(Gen::AStar),
                             N = mono_of(Gen::QN), I = mono_one();
        switch (g) {
            case Gen::One: t.add({I, I}, one()); break;
            case Gen::QN:
                t.add({N, N}, c.A1);
                t.add({A, S}, c.A2);
                t.add({S, A}, c.A3);
                t.add({I, N}, c.A4);
                t.add({N, I}, c.A5);
                t.add({I, I}, c.A6);
                break;
            case Gen::A:
                t.add({N, A}, c.B1);
                t.add({A, N}, c.B2);
                t.add({I, A}, c.B3);
                t.add({A, I}, c.B4);
                break;
            case Gen::AStar:
                t.add({S, N}, c.B1);
                t.add({N, S}, c.B2);
                t.add({S, I}, c.B3);
                t.add({I, S}, c.B4);
                break;
            case Gen::QNInv:
                throw DomainError("structure maps are not defined on (q^N)^-1");
        }
        return t;
    }

    Tensor<K> coproduct_mono(const NormalMonomial& m) const {
        auto it = delta_memo_.find(m);
        if (it != delta_memo_.end()) return it->second;
        Tensor<K> out(2);
        if (m.is_one()) {
            out.add({mono_one(), mono_one()}, one());
        } else {
            if (m.qn < 0) throw DomainError("structure maps are not defined on (q^N)^-1");
            Word w = m.word();
            NormalMonomial rest = m;
            if (m.astar > 0)
                --rest.astar;
            else if (m.qn > 0)
                --rest.qn;
            else
                --rest.a;
            out = tensor_mul(coproduct_gen(w.front()), coproduct_mono(rest), psi_);
        }
        delta_memo_.emplace(m, out);
        return out;
    }

    Tensor<K> coproduct(const Element<K>& e) const {
        Tensor<K> out(2);
        for (const auto& [m, c] : e.terms()) out += coproduct_mono(m).scaled(c);
        return out;
    }

    // Product of generator coproducts along a raw word, bypassing normal
    // forms; used for relation-compatibility checks.
    Tensor<K> coproduct_word(const Word& w) const {
        Tensor<K> out(2);
        out.add({mono_one(), mono_one()}, one());
        for (Gen g : w) out = tensor_mul(out, coproduct_gen(g), psi_);
        return out;
    }

    K counit_gen(Gen g) const {
        switch (g) {
            case Gen::One: return one();
            case Gen::QN: return s_.consts.e1;
            case Gen::A:
            case Gen::AStar: return s_.consts.e2;
            case Gen::QNInv: throw DomainError("structure maps are not defined on (q^N)^-1");
        }
        return one();
    }

    K counit_mono(const NormalMonomial& m) const {
        if (m.qn < 0) throw DomainError("structure maps are not defined on (q^N)^-1");
        K v = one();
        for (int t = 0; t < m.astar + m.a; ++t) v *= s_.consts.e2;
        for (int t = 0; t < m.qn; ++t) v *= s_.consts.e1;
        return v;
    }

    K counit(const Element<K>& e) const {
        K v = zero_like(one());
        for (const auto& [m, c] : e.terms()) v += counit_mono(m) * c;
        return v;
    }

    K counit_word(const Word& w) const {
        K v = one();
        for (Gen g : w) v *= counit_gen(g);
        return v;
    }

    Element<K> antipode_gen(Gen g) const {
        Element<K> e;
        const auto& c = s_.consts;
        switch (g) {
            case Gen::One: e.add(mono_one(), one()); break;
            case Gen::QN:
                e.add(mono_of(Gen::QN), c.k1);
                e.add(mono_of(Gen::A), c.k2);
                e.add(mono_of(Gen::AStar), c.k3);
                e.add(mono_one(), c.k4);
                break;
            case Gen::A:
                e.add(mono_of(Gen::QN), c.m1);
                e.add(mono_of(Gen::A), c.m2);
                e.add(mono_of(Gen::AStar), c.m3);
                e.add(mono_one(), c.m4);
                break;
            case Gen::AStar:
                e.add(mono_of(Gen::QN), c.m1);
                e.add(mono_of(Gen::AStar), c.m2);
                e.add(mono_of(Gen::A), c.m3);
                e.add(mono_one(), c.m4);
                break;
            case Gen::QNInv:
                throw DomainError("structure maps are not defined on (q^N)^-1");
        }
        return e;
    }

    // S(xy) = m . psi . (S (x) S): peel the leading generator.
    Element<K> antipode_mono(const NormalMonomial& m) const {
        auto it = s_memo_.find(m);
        if (it != s_memo_.end()) return it->second;
        Element<K> out;
        if (m.is_one()) {
            out.add(mono_one(), one());
        } else {
            if (m.qn < 0) throw DomainError("structure maps are not defined on (q^N)^-1");
            Word w = m.word();
            NormalMonomial rest = m;
            if (m.astar > 0)
                --rest.astar;
            else if (m.qn > 0)
                --rest.qn;
            else
                --rest.a;
            Tensor<K> t = Tensor<K>::outer({antipode_gen(w.front()), antipode_mono(rest)});
            out = as_element(mul_slots(psi_.braid(t), 0, s_.osc));
        }
        s_memo_.emplace(m, out);
        return out;
    }

    Element<K> antipode(const Element<K>& e) const {
        Element<K> out;
        for (const auto& [m, c] : e.terms()) out += antipode_mono(m).scaled(c);
        return out;
    }

    Element<K> antipode_word(const Word& w) const {
        if (w.empty()) return Element<K>::unit(one());
        if (w.size() == 1) return antipode_gen(w[0]);
        Word rest(w.begin() + 1, w.end());
        Tensor<K> t = Tensor<K>::outer({antipode_gen(w[0]), antipode_word(rest)});
        return as_element(mul_slots(psi_.braid(t), 0, s_.osc));
    }

private:
    Structure<K> s_;
    Braiding<K> psi_;
    mutable std::map<NormalMonomial, Tensor<K>> delta_memo_;
    mutable std::map<NormalMonomial, Element<K>> s_memo_;
};

}  // namespace braidosc
