#pragma once

#include <cassert>
#include <map>
#include <vector>

#include "braidosc/numeric.hpp"

namespace braidosc {

// Exponent vector; all monomials of one polynomial share the arity of the
// computation's IndetTable. std::vector's lexicographic operator< is the
// canonical monomial order.
using Mono = std::vector<int>;

// Sparse multivariate polynomial with integer coefficients.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, Int c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Mono(nvars, 0)] = std::move(c);
        return p;
    }

    static Poly variable(std::size_t nvars, std::size_t index, int exp = 1) {
        assert(index < nvars && exp >= 0);
        Poly p(nvars);
        Mono m(nvars, 0);
        m[index] = exp;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Int>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Mono(nvars_, 0));
    }

    Int constant_value() const {
        if (terms_.empty()) return 0;
        assert(is_constant());
        return terms_.begin()->second;
    }

    // Largest monomial in the canonical order.
    const std::pair<const Mono, Int>& leading() const {
        assert(!terms_.empty());
        return *terms_.rbegin();
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;  // -1 for the zero polynomial
    }

    bool depends_on(std::size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m[var] > 0) return true;
        return false;
    }

    std::vector<std::size_t> variables() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < nvars_; ++v)
            if (depends_on(v)) out.push_back(v);
        return out;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Mono& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        assert(nvars_ == o.nvars_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        assert(nvars_ == o.nvars_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        assert(a.nvars_ == b.nvars_);
        Poly r(a.nvars_);
        Mono m(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Int& c) const {
        Poly r(nvars_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Poly pow(unsigned e) const {
        Poly acc = Poly::constant(nvars_, 1);
        Poly b = *this;
        while (e) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const {
        if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
        return terms_ < o.terms_;
    }

    Int int_content() const {
        Int g = 0;
        for (const auto& [m, c] : terms_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;  // 0 for the zero polynomial
    }

    // Divides every coefficient; division must be exact.
    Poly int_divided(const Int& d) const {
        assert(d != 0);
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) {
            assert(c % d == 0);
            r.terms_.emplace(m, c / d);
        }
        return r;
    }

    Rat evaluate(const std::vector<Rat>& values) const {
        assert(values.size() == nvars_);
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i]) t *= rat_pow(values[i], m[i]);
            acc += t;
        }
        return acc;
    }

private:
    std::size_t nvars_;
    std::map<Mono, Int> terms_;
};

namespace detail {

// View in one variable: degree -> coefficient polynomial (with that
// variable's exponent zeroed out).
inline std::map<int, Poly> coeffs_in(const Poly& p, std::size_t var) {
    std::map<int, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int d = rest[var];
        rest[var] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(p.nvars())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

inline Poly leading_coeff_in(const Poly& p, std::size_t var) {
    int d = p.degree_in(var);
    Poly lc(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == d) {
            Mono rest = m;
            rest[var] = 0;
            lc.add_term(rest, c);
        }
    }
    return lc;
}

inline Poly shift_in(const Poly& p, std::size_t var, int by) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        mm[var] += by;
        assert(mm[var] >= 0);
        r.add_term(mm, c);
    }
    return r;
}

inline int last_variable(const Poly& a, const Poly& b) {
    for (int v = static_cast<int>(a.nvars()) - 1; v >= 0; --v)
        if (a.depends_on(v) || b.depends_on(v)) return v;
    return -1;
}

}  // namespace detail

// Exact multivariate division; throws if the division is not exact.
// Recursion bottoms out at integer coefficient division.
inline Poly exact_div(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (p.is_zero()) return Poly(p.nvars());
    if (d.is_constant()) {
        Int c = d.constant_value();
        for (const auto& [m, k] : p.terms())
            if (k % c != 0) throw DomainError("inexact polynomial division");
        return p.int_divided(c);
    }
    int var = detail::last_variable(d, d);
    Poly rem = p;
    Poly quot(p.nvars());
    Poly dlc = detail::leading_coeff_in(d, var);
    int ddeg = d.degree_in(var);
    while (!rem.is_zero()) {
        int rdeg = rem.degree_in(var);
        if (rdeg < ddeg) throw DomainError("inexact polynomial division");
        Poly rlc = detail::leading_coeff_in(rem, var);
        Poly t = detail::shift_in(exact_div(rlc, dlc), var, rdeg - ddeg);
        quot += t;
        rem -= t * d;
        if (!rem.is_zero() && rem.degree_in(var) >= rdeg &&
            detail::leading_coeff_in(rem, var) == rlc)
            throw DomainError("inexact polynomial division");
    }
    return quot;
}

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// Pseudo-remainder of a by b in the given variable, scaled so that
// lc(b)^(deg a - deg b + 1) * a = q*b + prem.
inline Poly prem(const Poly& a, const Poly& b, std::size_t var) {
    Poly r = a;
    Poly blc = leading_coeff_in(b, var);
    int bdeg = b.degree_in(var);
    int e = a.degree_in(var) - bdeg + 1;
    while (!r.is_zero() && r.degree_in(var) >= bdeg) {
        Poly rlc = leading_coeff_in(r, var);
        int shift = r.degree_in(var) - bdeg;
        r = r * blc - shift_in(rlc, var, shift) * b;
        --e;
    }
    for (; e > 0; --e) r = r * blc;
    return r;
}

// Content of p viewed as univariate in var: gcd of its coefficient polys.
inline Poly content_in(const Poly& p, std::size_t var) {
    Poly g(p.nvars());
    for (const auto& [deg, coeff] : coeffs_in(p, var)) {
        g = poly_gcd(g, coeff);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

}  // namespace detail

// Sign convention: leading coefficient positive.
inline Poly sign_normalized(const Poly& p) {
    if (p.is_zero()) return p;
    return p.leading().second > 0 ? p : -p;
}

// GCD over Z[x1..xn] via content/primitive-part recursion with a
// subresultant PRS for the primitive parts.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    assert(a.nvars() == b.nvars());
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    int var = detail::last_variable(a, b);
    if (var < 0)
        return Poly::constant(a.nvars(),
                              boost::multiprecision::gcd(a.constant_value(), b.constant_value()));
    if (!a.depends_on(var)) return poly_gcd(a, detail::content_in(b, var));
    if (!b.depends_on(var)) return poly_gcd(detail::content_in(a, var), b);

    Poly ca = detail::content_in(a, var);
    Poly cb = detail::content_in(b, var);
    Poly c = poly_gcd(ca, cb);
    Poly r0 = exact_div(a, ca);
    Poly r1 = exact_div(b, cb);
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);

    Poly g = Poly::constant(a.nvars(), 1);
    Poly h = g;
    while (true) {
        int d = r0.degree_in(var) - r1.degree_in(var);
        Poly rem = detail::prem(r0, r1, var);
        if (rem.is_zero()) {
            Poly pp = exact_div(r1, detail::content_in(r1, var));
            return sign_normalized(c * pp);
        }
        if (rem.degree_in(var) == 0) return sign_normalized(c);
        r0 = r1;
        Poly divisor = g * h.pow(static_cast<unsigned>(d));
        r1 = exact_div(rem, divisor);
        g = detail::leading_coeff_in(r0, var);
        if (d > 0) h = exact_div(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
}

}  // namespace braidosc
