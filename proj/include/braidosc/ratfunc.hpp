#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "braidosc/indet_table.hpp"
#include "braidosc/polynomial.hpp"

namespace braidosc {

// Element of the field of rational functions over the integers in the
// indeterminates of one IndetTable. Canonical form: gcd(num, den) = 1,
// den nonzero with positive leading coefficient, zero stored as 0/1.
class RatFunc {
public:
    RatFunc() : num_(0), den_(Poly::constant(0, 1)) {}

    static RatFunc from_int(TablePtr table, Int v) {
        return RatFunc(table, Poly::constant(table->size(), std::move(v)),
                       Poly::constant(table->size(), 1));
    }
    static RatFunc from_rat(TablePtr table, const Rat& v) {
        return RatFunc(table, Poly::constant(table->size(), numerator(v)),
                       Poly::constant(table->size(), denominator(v)));
    }
    static RatFunc indeterminate(TablePtr table, const std::string& name) {
        int idx = table->index_of(name);
        if (idx < 0) throw DomainError("unknown indeterminate '" + name + "'");
        return RatFunc(table, Poly::variable(table->size(), idx),
                       Poly::constant(table->size(), 1));
    }
    static RatFunc from_polys(TablePtr table, Poly num, Poly den) {
        return RatFunc(std::move(table), std::move(num), std::move(den));
    }

    const TablePtr& table() const { return table_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        a.check(b);
        return RatFunc(a.table_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        a.check(b);
        return RatFunc(a.table_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        a.check(b);
        return RatFunc(a.table_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        a.check(b);
        if (b.is_zero()) throw DomainError("division by zero rational function");
        return RatFunc(a.table_, a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const {
        check(o);
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(int e) const {
        if (e < 0) {
            if (is_zero()) throw DomainError("zero raised to a negative power");
            return RatFunc(table_, den_.pow(static_cast<unsigned>(-e)),
                           num_.pow(static_cast<unsigned>(-e)));
        }
        return RatFunc(table_, num_.pow(static_cast<unsigned>(e)),
                       den_.pow(static_cast<unsigned>(e)));
    }

    // Exact evaluation at a rational point. The assignment is keyed by
    // indeterminate name and must cover every indeterminate that actually
    // appears; the denominator must not vanish there.
    Rat evaluate(const std::map<std::string, Rat>& assignment) const {
        std::vector<Rat> values(table_->size(), Rat(0));
        for (std::size_t i = 0; i < table_->size(); ++i) {
            bool used = num_.depends_on(i) || den_.depends_on(i);
            auto it = assignment.find(table_->name(i));
            if (it != assignment.end())
                values[i] = it->second;
            else if (used)
                throw EvalError("no value assigned to '" + table_->name(i) + "'");
        }
        Rat d = den_.evaluate(values);
        if (d == 0) throw EvalError("pole: denominator vanishes at the assignment");
        return num_.evaluate(values) / d;
    }

    // Ring-homomorphic substitution into another computation's field.
    // Every indeterminate that appears must be mapped.
    RatFunc substitute(const std::map<std::string, RatFunc>& map, const TablePtr& target) const {
        std::vector<RatFunc> values(table_->size());
        for (std::size_t i = 0; i < table_->size(); ++i) {
            auto it = map.find(table_->name(i));
            if (it != map.end()) {
                if (!same_table(it->second.table(), target))
                    throw DomainError("substitution value for '" + table_->name(i) +
                                      "' lives over the wrong table");
                values[i] = it->second;
            } else if (num_.depends_on(i) || den_.depends_on(i)) {
                throw EvalError("no substitution for '" + table_->name(i) + "'");
            }
        }
        RatFunc n = eval_poly(num_, values, target);
        RatFunc d = eval_poly(den_, values, target);
        if (d.is_zero()) throw EvalError("pole: denominator vanishes under substitution");
        return n / d;
    }

    // Square root of a monomial c*m with even exponents and square c.
    std::optional<RatFunc> sqrt_monomial() const {
        if (is_zero()) return from_int(table_, 0);
        if (num_.term_count() != 1 || den_.term_count() != 1) return std::nullopt;
        auto half = [](const std::pair<const Mono, Int>& t) -> std::optional<std::pair<Mono, Int>> {
            Mono m = t.first;
            for (auto& e : m) {
                if (e % 2) return std::nullopt;
                e /= 2;
            }
            auto r = int_sqrt_exact(t.second);
            if (!r) return std::nullopt;
            return std::make_pair(std::move(m), *r);
        };
        auto n = half(*num_.terms().begin());
        auto d = half(*den_.terms().begin());
        if (!n || !d) return std::nullopt;
        Poly np(table_->size()), dp(table_->size());
        np.add_term(n->first, n->second);
        dp.add_term(d->first, d->second);
        return RatFunc(table_, std::move(np), std::move(dp));
    }

private:
    RatFunc(TablePtr table, Poly num, Poly den)
        : table_(std::move(table)), num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    void check(const RatFunc& o) const {
        if (!same_table(table_, o.table_))
            throw DomainError("rational functions over different indeterminate tables");
    }

    void normalize() {
        if (den_.is_zero()) throw DomainError("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(table_->size(), 1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!(g.is_constant() && g.constant_value() == 1)) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        if (den_.leading().second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static RatFunc eval_poly(const Poly& p, const std::vector<RatFunc>& values,
                             const TablePtr& target) {
        RatFunc acc = from_int(target, 0);
        for (const auto& [m, c] : p.terms()) {
            RatFunc t = from_int(target, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t *= values[i].pow(m[i]);
            acc += t;
        }
        return acc;
    }

    TablePtr table_;
    Poly num_;
    Poly den_;
};

}  // namespace braidosc
