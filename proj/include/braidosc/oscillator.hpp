#pragma once

#include <compare>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidosc/field.hpp"

namespace braidosc {

// Generators of the oscillator algebra. QNInv is only admitted when the
// parameters declare q^N invertible (group-like mode).
enum class Gen : unsigned char { One, AStar, QN, A, QNInv };

using Word = std::vector<Gen>;

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::One: return "1";
        case Gen::AStar: return "a^*";
        case Gen::QN: return "q^N";
        case Gen::A: return "a";
        case Gen::QNInv: return "q^(-N)";
    }
    return "?";
}

// Defining data of the algebra: a q^N = q q^N a, q^N a^* = q a^* q^N,
// a a^* - Q1 a^* a = Q2 q^{2N} + Q3 q^N + Q4.
template <class K>
struct OscillatorParams {
    K q, Q1, Q2, Q3, Q4;
    bool qn_invertible = false;

    bool operator==(const OscillatorParams&) const = default;
};

// Normal-basis monomial (a^*)^i (q^N)^j a^k. j may go negative only in
// group-like mode.
struct NormalMonomial {
    int astar = 0;
    int qn = 0;
    int a = 0;

    auto operator<=>(const NormalMonomial&) const = default;

    bool is_one() const { return astar == 0 && qn == 0 && a == 0; }
    int degree() const { return astar - a; }

    Word word() const {
        Word w;
        w.reserve(astar + std::abs(qn) + a);
        for (int t = 0; t < astar; ++t) w.push_back(Gen::AStar);
        for (int t = 0; t < qn; ++t) w.push_back(Gen::QN);
        for (int t = 0; t < -qn; ++t) w.push_back(Gen::QNInv);
        for (int t = 0; t < a; ++t) w.push_back(Gen::A);
        return w;
    }
};

inline NormalMonomial mono_one() { return {}; }
inline NormalMonomial mono_of(Gen g) {
    switch (g) {
        case Gen::One: return {0, 0, 0};
        case Gen::AStar: return {1, 0, 0};
        case Gen::QN: return {0, 1, 0};
        case Gen::A: return {0, 0, 1};
        case Gen::QNInv: return {0, -1, 0};
    }
    return {};
}

// Finite linear combination of normal monomials; zero coefficients are
// never stored, so map equality is canonical equality.
template <class K>
class Element {
public:
    Element() = default;

    static Element zero() { return Element(); }
    static Element monomial(NormalMonomial m, K coeff) {
        Element e;
        e.add(m, coeff);
        return e;
    }
    static Element unit(const K& sample) { return monomial(mono_one(), one_like(sample)); }
    static Element generator(Gen g, const K& sample) {
        return monomial(mono_of(g), one_like(sample));
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<NormalMonomial, K>& terms() const { return terms_; }

    void add(const NormalMonomial& m, const K& c) {
        if (braidosc::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (braidosc::is_zero(it->second)) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const {
        Element r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Element scaled(const K& c) const {
        Element r;
        if (braidosc::is_zero(c)) return r;
        for (const auto& [m, k] : terms_) r.add(m, k * c);
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Common degree under deg a^* = +1, deg a = -1, deg q^N = 0, or nullopt
    // when the element mixes degrees. Zero counts as degree 0.
    std::optional<int> degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

private:
    std::map<NormalMonomial, K> terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost, Random };

namespace detail {

// The three defining relations plus unit elimination and, in group-like
// mode, the inverse-generator rules, oriented toward a^* < q^N < a.
// Returns true when (x, y) is a redex and fills the replacement.
template <class K>
bool rewrite_pair(Gen x, Gen y, const OscillatorParams<K>& p,
                  std::vector<std::pair<K, std::vector<Gen>>>& out) {
    const K one = one_like(p.q);
    if (x == Gen::One) {
        out = {{one, {y}}};
        return true;
    }
    if (y == Gen::One) {
        out = {{one, {x}}};
        return true;
    }
    if (x == Gen::A && y == Gen::QN) {
        out = {{p.q, {Gen::QN, Gen::A}}};
        return true;
    }
    if (x == Gen::QN && y == Gen::AStar) {
        out = {{p.q, {Gen::AStar, Gen::QN}}};
        return true;
    }
    if (x == Gen::A && y == Gen::AStar) {
        out.clear();
        if (!braidosc::is_zero(p.Q1)) out.push_back({p.Q1, {Gen::AStar, Gen::A}});
        if (!braidosc::is_zero(p.Q2)) out.push_back({p.Q2, {Gen::QN, Gen::QN}});
        if (!braidosc::is_zero(p.Q3)) out.push_back({p.Q3, {Gen::QN}});
        if (!braidosc::is_zero(p.Q4)) out.push_back({p.Q4, {}});
        return true;
    }
    if (x == Gen::QNInv || y == Gen::QNInv) {
        if (!p.qn_invertible)
            throw DomainError("q^N is not invertible for these oscillator parameters");
        if (x == Gen::QN && y == Gen::QNInv) {
            out = {{one, {}}};
            return true;
        }
        if (x == Gen::QNInv && y == Gen::QN) {
            out = {{one, {}}};
            return true;
        }
        if (x == Gen::A && y == Gen::QNInv) {
            out = {{one / p.q, {Gen::QNInv, Gen::A}}};
            return true;
        }
        if (x == Gen::QNInv && y == Gen::AStar) {
            out = {{one / p.q, {Gen::AStar, Gen::QNInv}}};
            return true;
        }
    }
    return false;
}

inline NormalMonomial collect_sorted(const Word& w) {
    NormalMonomial m;
    for (Gen g : w) {
        switch (g) {
            case Gen::AStar: ++m.astar; break;
            case Gen::QN: ++m.qn; break;
            case Gen::QNInv: --m.qn; break;
            case Gen::A: ++m.a; break;
            case Gen::One: break;
        }
    }
    return m;
}

}  // namespace detail

// Exhaustive rewriting of a word to the normal basis. The rules strictly
// reduce the inversion count of the order a^* < q^N < a, so any strategy
// terminates; confluence is covered by the property suite.
template <class K>
Element<K> normal_form(const Word& word, const OscillatorParams<K>& p,
                       RewriteStrategy strategy = RewriteStrategy::Leftmost,
                       unsigned random_seed = 0) {
    std::mt19937 rng(random_seed);
    Element<K> result;
    std::vector<std::pair<K, Word>> work{{one_like(p.q), word}};
    std::vector<std::pair<K, std::vector<Gen>>> repl;
    while (!work.empty()) {
        auto [coeff, w] = std::move(work.back());
        work.pop_back();
        std::vector<std::size_t> redexes;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (detail::rewrite_pair(w[i], w[i + 1], p, repl)) redexes.push_back(i);
        if (redexes.empty()) {
            NormalMonomial m = detail::collect_sorted(w);
            if (m.qn < 0 && !p.qn_invertible)
                throw DomainError("q^N is not invertible for these oscillator parameters");
            result.add(m, coeff);
            continue;
        }
        std::size_t at;
        switch (strategy) {
            case RewriteStrategy::Leftmost: at = redexes.front(); break;
            case RewriteStrategy::Rightmost: at = redexes.back(); break;
            default:
                at = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        }
        detail::rewrite_pair(w[at], w[at + 1], p, repl);
        for (const auto& [rc, rw] : repl) {
            Word next;
            next.reserve(w.size() + rw.size());
            next.insert(next.end(), w.begin(), w.begin() + at);
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), w.begin() + at + 2, w.end());
            work.emplace_back(coeff * rc, std::move(next));
        }
    }
    return result;
}

namespace detail {

template <class K>
Element<K> mul_mono(const NormalMonomial& x, const NormalMonomial& y,
                    const OscillatorParams<K>& p);

template <class K>
Element<K> mul_mono_elem(const NormalMonomial& x, const Element<K>& e,
                         const OscillatorParams<K>& p) {
    Element<K> out;
    for (const auto& [m, c] : e.terms()) {
        Element<K> t = mul_mono(x, m, p);
        for (const auto& [tm, tc] : t.terms()) out.add(tm, tc * c);
    }
    return out;
}

template <class K>
Element<K> mul_elem_mono(const Element<K>& e, const NormalMonomial& y,
                         const OscillatorParams<K>& p) {
    Element<K> out;
    for (const auto& [m, c] : e.terms()) {
        Element<K> t = mul_mono(m, y, p);
        for (const auto& [tm, tc] : t.terms()) out.add(tm, tc * c);
    }
    return out;
}

template <class K>
Element<K> mul_mono(const NormalMonomial& x, const NormalMonomial& y,
                    const OscillatorParams<K>& p) {
    if ((x.qn < 0 || y.qn < 0) && !p.qn_invertible)
        throw DomainError("q^N is not invertible for these oscillator parameters");
    // With no a-against-a^* crossing the commutations are pure q-powers:
    // a^k (q^N)^j = q^{kj} (q^N)^j a^k and (q^N)^j (a^*)^i = q^{ji} (a^*)^i (q^N)^j.
    if (x.a == 0 || y.astar == 0) {
        NormalMonomial m{x.astar + y.astar, x.qn + y.qn, x.a + y.a};
        int qexp = x.qn * y.astar + x.a * y.qn;
        return Element<K>::monomial(m, field_pow(p.q, qexp));
    }
    // Peel one a a^* crossing via the defining relation and recurse.
    NormalMonomial left{x.astar, x.qn, x.a - 1};
    NormalMonomial right{y.astar - 1, y.qn, y.a};
    Element<K> rel;
    rel.add({1, 0, 1}, p.Q1);
    rel.add({0, 2, 0}, p.Q2);
    rel.add({0, 1, 0}, p.Q3);
    rel.add({0, 0, 0}, p.Q4);
    Element<K> mid = mul_mono_elem(left, rel, p);
    return mul_elem_mono(mid, right, p);
}

}  // namespace detail

template <class K>
Element<K> mul(const Element<K>& x, const Element<K>& y, const OscillatorParams<K>& p) {
    Element<K> out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            Element<K> t = detail::mul_mono(mx, my, p);
            K c = cx * cy;
            for (const auto& [tm, tc] : t.terms()) out.add(tm, tc * c);
        }
    }
    return out;
}

inline std::string mono_str(const NormalMonomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    auto app = [&](const std::string& s) {
        if (!out.empty()) out += '*';
        out += s;
    };
    if (m.astar == 1) app("a^*");
    else if (m.astar > 1) app("(a^*)^" + std::to_string(m.astar));
    if (m.qn == 1) app("q^N");
    else if (m.qn != 0) app("q^(" + std::to_string(m.qn) + "N)");
    if (m.a == 1) app("a");
    else if (m.a > 1) app("a^" + std::to_string(m.a));
    return out;
}

template <class K>
std::string element_str(const Element<K>& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        std::string cs = scalar_str(c);
        bool unit_coeff = (cs == "1");
        if (!unit_coeff) {
            bool wrap = cs.find_first_of("+-/ ") != std::string::npos && cs[0] != '(';
            out += wrap ? "(" + cs + ")" : cs;
        }
        if (m.is_one()) {
            if (unit_coeff) out += "1";
        } else {
            if (!unit_coeff) out += "*";
            out += mono_str(m);
        }
    }
    return out;
}

}  // namespace braidosc
