#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidosc/oscillator.hpp"

namespace braidosc {

// Structure constants of the braiding on ordered generator pairs. The unit
// rules psi(1 (x) x) = x (x) 1 and psi(x (x) 1) = 1 (x) x are hard-wired.
template <class K>
struct BraidTable {
    K g1, g2, g3, g4, g5, g6;  // psi(q^N (x) q^N)
    K d1, d2, d3, d4;          // psi(q^N (x) a) and psi(a^* (x) q^N)
    K f1, f2, f3, f4;          // psi(q^N (x) a^*) and psi(a (x) q^N)
    K z;                       // psi(a (x) a) and psi(a^* (x) a^*)
    K b1, b2, b3, b4, b5, b6;  // psi(a (x) a^*)
    K c1, c2, c3, c4, c5, c6;  // psi(a^* (x) a)

    bool operator==(const BraidTable&) const = default;

    // The permutation braiding: psi(x (x) y) = y (x) x.
    static BraidTable flip_table(const K& sample) {
        const K zero = zero_like(sample);
        const K one = one_like(sample);
        BraidTable t{zero, zero, zero, zero, zero, zero, zero, zero, zero, zero,
                     zero, zero, zero, zero, zero, zero, zero, zero, zero, zero,
                     zero, zero, zero, zero, zero, zero, zero};
        t.g1 = one;
        t.d1 = one;
        t.f1 = one;
        t.z = one;
        t.b3 = one;  // psi(a (x) a^*) = a^* (x) a
        t.c2 = one;  // psi(a^* (x) a) = a (x) a^*
        return t;
    }
};

// Finite linear combination of n-tuples of normal monomials.
template <class K>
class Tensor {
public:
    using Key = std::vector<NormalMonomial>;

    explicit Tensor(int arity = 1) : arity_(arity) {}

    static Tensor outer(const std::vector<Element<K>>& slots) {
        Tensor t(static_cast<int>(slots.size()));
        Key key(slots.size());
        std::function<void(std::size_t, const K&)> rec = [&](std::size_t s, const K& coeff) {
            if (s == slots.size()) {
                t.add(key, coeff);
                return;
            }
            for (const auto& [m, c] : slots[s].terms()) {
                key[s] = m;
                rec(s + 1, coeff * c);
            }
        };
        if (!slots.empty()) {
            for (const auto& [m, c] : slots[0].terms()) {
                key[0] = m;
                rec(1, c);
            }
        }
        return t;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, K>& terms() const { return terms_; }

    void add(const Key& key, const K& c) {
        if (braidosc::is_zero(c)) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (braidosc::is_zero(it->second)) terms_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    Tensor scaled(const K& c) const {
        Tensor r(arity_);
        if (braidosc::is_zero(c)) return r;
        for (const auto& [k, v] : terms_) r.add(k, v * c);
        return r;
    }

    bool operator==(const Tensor& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

private:
    void check(const Tensor& o) const {
        if (arity_ != o.arity_) throw DomainError("tensor arity mismatch");
    }

    int arity_;
    std::map<Key, K> terms_;
};

enum class PeelStrategy { LeftFirst, RightFirst };

// The braiding psi extended from the generator table to arbitrary words by
// hexagon peeling:
//   psi(gu (x) w) = sum psi(g (x) A) applied over psi(u (x) w) = sum A (x) B
//   psi(u (x) hv) = sum over psi(u (x) h), then psi(- (x) v)
// The two peel orders must agree for a consistent table; the strategy picks
// which one drives the recursion when both words are long.
template <class K>
class Braiding {
public:
    Braiding(OscillatorParams<K> osc, BraidTable<K> table,
             PeelStrategy strategy = PeelStrategy::LeftFirst)
        : osc_(std::move(osc)), table_(std::move(table)), strategy_(strategy) {}

    const OscillatorParams<K>& osc() const { return osc_; }
    const BraidTable<K>& table() const { return table_; }

    Tensor<K> braid_mono(const NormalMonomial& m1, const NormalMonomial& m2) const {
        return braid_words(m1.word(), m2.word());
    }

    // Bilinear extension to arity-2 tensors.
    Tensor<K> braid(const Tensor<K>& t) const {
        if (t.arity() != 2) throw DomainError("braid expects an arity-2 tensor");
        Tensor<K> out(2);
        for (const auto& [key, c] : t.terms()) {
            Tensor<K> b = braid_mono(key[0], key[1]);
            for (const auto& [bk, bc] : b.terms()) out.add(bk, bc * c);
        }
        return out;
    }

    Tensor<K> braid_words(const Word& u0, const Word& v0) const {
        Word u = strip_ones(u0);
        Word v = strip_ones(v0);
        auto key = std::make_pair(u, v);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        Tensor<K> out(2);
        if (u.empty()) {
            Element<K> e = normal_form(v, osc_);
            for (const auto& [m, c] : e.terms()) out.add({m, mono_one()}, c);
        } else if (v.empty()) {
            Element<K> e = normal_form(u, osc_);
            for (const auto& [m, c] : e.terms()) out.add({mono_one(), m}, c);
        } else if (u.size() == 1 && v.size() == 1) {
            out = braid_gen(u[0], v[0]);
        } else if (u.size() > 1 && (strategy_ == PeelStrategy::LeftFirst || v.size() == 1)) {
            // u = g . rest
            Word rest(u.begin() + 1, u.end());
            Tensor<K> inner = braid_words(rest, v);
            for (const auto& [ik, ic] : inner.terms()) {
                Tensor<K> top = braid_words(Word{u[0]}, ik[0].word());
                for (const auto& [tk, tc] : top.terms()) {
                    Element<K> prod = detail::mul_mono(tk[1], ik[1], osc_);
                    K c = ic * tc;
                    for (const auto& [pm, pc] : prod.terms()) out.add({tk[0], pm}, pc * c);
                }
            }
        } else {
            // v = h . rest
            Word rest(v.begin() + 1, v.end());
            Tensor<K> first = braid_words(u, Word{v[0]});
            for (const auto& [fk, fc] : first.terms()) {
                Tensor<K> second = braid_words(fk[1].word(), rest);
                for (const auto& [sk, sc] : second.terms()) {
                    Element<K> prod = detail::mul_mono(fk[0], sk[0], osc_);
                    K c = fc * sc;
                    for (const auto& [pm, pc] : prod.terms()) out.add({pm, sk[1]}, pc * c);
                }
            }
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    static Word strip_ones(const Word& w) {
        Word out;
        out.reserve(w.size());
        for (Gen g : w)
            if (g != Gen::One) out.push_back(g);
        return out;
    }

    Tensor<K> braid_gen(Gen x, Gen y) const {
        Tensor<K> out(2);
        if (x == Gen::QNInv || y == Gen::QNInv)
            throw DomainError("the braiding is not defined on (q^N)^-1");
        if (x == Gen::One) {
            out.add({mono_of(y), mono_one()}, one_like(osc_.q));
            return out;
        }
        if (y == Gen::One) {
            out.add({mono_one(), mono_of(x)}, one_like(osc_.q));
            return out;
        }
        const NormalMonomial A = mono_of(Gen::A), S = mono_of(Gen::AStar), N = mono_of(Gen::QN),
                             I = mono_one();
        const BraidTable<K>& t = table_;
        auto six = [&](const K& k1, const K& k2, const K& k3, const K& k4, const K& k5,
                       const K& k6) {
            out.add({N, N}, k1);
            out.add({A, S}, k2);
            out.add({S, A}, k3);
            out.add({I, N}, k4);
            out.add({N, I}, k5);
            out.add({I, I}, k6);
        };
        if (x == Gen::QN && y == Gen::QN) {
            six(t.g1, t.g2, t.g3, t.g4, t.g5, t.g6);
        } else if (x == Gen::QN && y == Gen::A) {
            out.add({A, N}, t.d1);
            out.add({N, A}, t.d2);
            out.add({I, A}, t.d3);
            out.add({A, I}, t.d4);
        } else if (x == Gen::AStar && y == Gen::QN) {
            out.add({N, S}, t.d1);
            out.add({S, N}, t.d2);
            out.add({S, I}, t.d3);
            out.add({I, S}, t.d4);
        } else if (x == Gen::QN && y == Gen::AStar) {
            out.add({S, N}, t.f1);
            out.add({N, S}, t.f2);
            out.add({I, S}, t.f3);
            out.add({S, I}, t.f4);
        } else if (x == Gen::A && y == Gen::QN) {
            out.add({N, A}, t.f1);
            out.add({A, N}, t.f2);
            out.add({A, I}, t.f3);
            out.add({I, A}, t.f4);
        } else if (x == Gen::A && y == Gen::A) {
            out.add({A, A}, t.z);
        } else if (x == Gen::AStar && y == Gen::AStar) {
            out.add({S, S}, t.z);
        } else if (x == Gen::A && y == Gen::AStar) {
            six(t.b1, t.b2, t.b3, t.b4, t.b5, t.b6);
        } else {  // a^* (x) a
            six(t.c1, t.c2, t.c3, t.c4, t.c5, t.c6);
        }
        return out;
    }

    OscillatorParams<K> osc_;
    BraidTable<K> table_;
    PeelStrategy strategy_;
    mutable std::map<std::pair<Word, Word>, Tensor<K>> memo_;
};

// ---- slot combinators --------------------------------------------------

// Apply psi to adjacent slots (s, s+1).
template <class K>
Tensor<K> braid_slots(const Tensor<K>& t, int s, const Braiding<K>& psi) {
    Tensor<K> out(t.arity());
    for (const auto& [key, c] : t.terms()) {
        Tensor<K> b = psi.braid_mono(key[s], key[s + 1]);
        for (const auto& [bk, bc] : b.terms()) {
            auto k2 = key;
            k2[s] = bk[0];
            k2[s + 1] = bk[1];
            out.add(k2, bc * c);
        }
    }
    return out;
}

// Multiply slots s and s+1 together (the map id...m...id).
template <class K>
Tensor<K> mul_slots(const Tensor<K>& t, int s, const OscillatorParams<K>& p) {
    Tensor<K> out(t.arity() - 1);
    for (const auto& [key, c] : t.terms()) {
        Element<K> prod = detail::mul_mono(key[s], key[s + 1], p);
        typename Tensor<K>::Key k2;
        k2.reserve(key.size() - 1);
        k2.insert(k2.end(), key.begin(), key.begin() + s);
        k2.push_back(mono_one());
        k2.insert(k2.end(), key.begin() + s + 2, key.end());
        for (const auto& [pm, pc] : prod.terms()) {
            k2[s] = pm;
            out.add(k2, pc * c);
        }
    }
    return out;
}

// Replace slot s through a linear map into the algebra.
template <class K, class F>
Tensor<K> map_slot(const Tensor<K>& t, int s, F&& f) {
    Tensor<K> out(t.arity());
    for (const auto& [key, c] : t.terms()) {
        Element<K> img = f(key[s]);
        auto k2 = key;
        for (const auto& [m, mc] : img.terms()) {
            k2[s] = m;
            out.add(k2, mc * c);
        }
    }
    return out;
}

// Replace slot s through a linear map into the 2-fold tensor, raising arity.
template <class K, class F>
Tensor<K> expand_slot(const Tensor<K>& t, int s, F&& f) {
    Tensor<K> out(t.arity() + 1);
    for (const auto& [key, c] : t.terms()) {
        Tensor<K> img = f(key[s]);
        typename Tensor<K>::Key k2;
        k2.reserve(key.size() + 1);
        k2.insert(k2.end(), key.begin(), key.begin() + s);
        k2.push_back(mono_one());
        k2.push_back(mono_one());
        k2.insert(k2.end(), key.begin() + s + 1, key.end());
        for (const auto& [ik, ic] : img.terms()) {
            k2[s] = ik[0];
            k2[s + 1] = ik[1];
            out.add(k2, ic * c);
        }
    }
    return out;
}

// Collapse slot s through a linear functional into scalars.
template <class K, class F>
Tensor<K> fold_slot(const Tensor<K>& t, int s, F&& f) {
    Tensor<K> out(t.arity() - 1);
    for (const auto& [key, c] : t.terms()) {
        K v = f(key[s]);
        if (braidosc::is_zero(v)) continue;
        typename Tensor<K>::Key k2;
        k2.reserve(key.size() - 1);
        k2.insert(k2.end(), key.begin(), key.begin() + s);
        k2.insert(k2.end(), key.begin() + s + 1, key.end());
        out.add(k2, v * c);
    }
    return out;
}

template <class K>
Element<K> as_element(const Tensor<K>& t) {
    if (t.arity() != 1) throw DomainError("tensor arity mismatch");
    Element<K> e;
    for (const auto& [key, c] : t.terms()) e.add(key[0], c);
    return e;
}

template <class K>
Tensor<K> as_tensor1(const Element<K>& e) {
    Tensor<K> t(1);
    for (const auto& [m, c] : e.terms()) t.add({m}, c);
    return t;
}

// Braided product on the n-fold tensor algebra: each factor of the right
// operand crosses leftward past the tail of the left operand one slot at a
// time, then multiplies into its home slot.
template <class K>
Tensor<K> tensor_mul(const Tensor<K>& x, const Tensor<K>& y, const Braiding<K>& psi) {
    if (x.arity() != y.arity()) throw DomainError("tensor arity mismatch");
    const int n = x.arity();
    Tensor<K> out(n);
    for (const auto& [yk, yc] : y.terms()) {
        // states: partially combined tuples
        std::map<typename Tensor<K>::Key, K> cur;
        for (const auto& [xk, xc] : x.terms()) cur[xk] = xc * yc;
        for (int i = 0; i < n; ++i) {
            // in-flight monomial from y's slot i crosses slots n-1 .. i+1
            std::map<std::pair<typename Tensor<K>::Key, NormalMonomial>, K> flight;
            for (const auto& [key, c] : cur) flight[{key, yk[i]}] = c;
            for (int s = n - 1; s > i; --s) {
                std::map<std::pair<typename Tensor<K>::Key, NormalMonomial>, K> next;
                for (const auto& [state, c] : flight) {
                    Tensor<K> b = psi.braid_mono(state.first[s], state.second);
                    for (const auto& [bk, bc] : b.terms()) {
                        auto key = state.first;
                        key[s] = bk[1];
                        auto it = next.find({key, bk[0]});
                        K v = bc * c;
                        if (it == next.end()) {
                            if (!braidosc::is_zero(v)) next.emplace(std::make_pair(key, bk[0]), v);
                        } else {
                            it->second += v;
                            if (braidosc::is_zero(it->second)) next.erase(it);
                        }
                    }
                }
                flight = std::move(next);
            }
            std::map<typename Tensor<K>::Key, K> landed;
            for (const auto& [state, c] : flight) {
                Element<K> prod = detail::mul_mono(state.first[i], state.second, psi.osc());
                for (const auto& [pm, pc] : prod.terms()) {
                    auto key = state.first;
                    key[i] = pm;
                    auto it = landed.find(key);
                    K v = pc * c;
                    if (it == landed.end()) {
                        if (!braidosc::is_zero(v)) landed.emplace(std::move(key), v);
                    } else {
                        it->second += v;
                        if (braidosc::is_zero(it->second)) landed.erase(it);
                    }
                }
            }
            cur = std::move(landed);
        }
        for (const auto& [key, c] : cur) out.add(key, c);
    }
    return out;
}

// The permutation map on two factors.
template <class K>
Tensor<K> flip(const Tensor<K>& t) {
    if (t.arity() != 2) throw DomainError("flip expects an arity-2 tensor");
    Tensor<K> out(2);
    for (const auto& [key, c] : t.terms()) out.add({key[1], key[0]}, c);
    return out;
}

template <class K>
std::string tensor_str(const Tensor<K>& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : t.terms()) {
        if (!out.empty()) out += " + ";
        std::string cs = scalar_str(c);
        if (cs != "1") {
            bool wrap = cs.find_first_of("+-/ ") != std::string::npos && cs[0] != '(';
            out += (wrap ? "(" + cs + ")" : cs) + "*";
        }
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s) out += "(x)";
            out += mono_str(key[s]);
        }
    }
    return out;
}

// ---- exchange relations -------------------------------------------------

struct ExchangeRelation {
    std::string lhs;
    std::string rhs;
    Gen x, y;  // the relation is x_2 y_1 = psi(x (x) y) read in copy indices
};

inline std::string copy_name(Gen g, int copy) {
    switch (g) {
        case Gen::A: return "a" + std::to_string(copy);
        case Gen::AStar: return "a" + std::to_string(copy) + "*";
        case Gen::QN: return "q" + std::to_string(copy) + "^N";
        default: return "1";
    }
}

inline std::string copy_mono_name(const NormalMonomial& m, int copy) {
    if (m.is_one()) return "";
    std::string out;
    auto app = [&](const std::string& s, int e) {
        for (int t = 0; t < e; ++t) {
            if (!out.empty()) out += ' ';
            out += s;
        }
    };
    app(copy_name(Gen::AStar, copy), m.astar);
    app(copy_name(Gen::QN, copy), m.qn);
    app(copy_name(Gen::A, copy), m.a);
    return out;
}

// Cross-copy normal-ordering rules x_2 y_1 = sum coeff . u_1 v_2 for the
// nine ordered generator pairs, read off the braiding.
template <class K>
std::vector<ExchangeRelation> exchange_relations(
    const Braiding<K>& psi,
    const std::function<std::string(const K&)>& print_scalar = [](const K& k) {
        return scalar_str(k);
    }) {
    std::vector<ExchangeRelation> out;
    const Gen gens[3] = {Gen::A, Gen::AStar, Gen::QN};
    for (Gen x : gens) {
        for (Gen y : gens) {
            Tensor<K> b = psi.braid_mono(mono_of(x), mono_of(y));
            std::string rhs;
            for (const auto& [key, c] : b.terms()) {
                if (!rhs.empty()) rhs += " + ";
                std::string left = copy_mono_name(key[0], 1);
                std::string right = copy_mono_name(key[1], 2);
                std::string monos = left.empty() ? right : (right.empty() ? left : left + " " + right);
                std::string cs = print_scalar(c);
                if (monos.empty()) {
                    rhs += cs;
                } else if (cs == "1") {
                    rhs += monos;
                } else {
                    bool wrap = cs.find_first_of("+-/ ") != std::string::npos && cs[0] != '(';
                    rhs += (wrap ? "(" + cs + ")" : cs) + "\xc2\xb7" + monos;
                }
            }
            if (rhs.empty()) rhs = "0";
            out.push_back({copy_name(x, 2) + " " + copy_name(y, 1), rhs, x, y});
        }
    }
    return out;
}

}  // namespace braidosc
