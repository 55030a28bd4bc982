#pragma once

#include <cctype>
#include <string>

#include "braidosc/ratfunc.hpp"

namespace braidosc {

// Coefficient grammar:
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' signed-int)?
//   atom   := integer | symbol | 'sqrt' '(' symbol ')' | '(' expr ')'
//
// No implicit multiplication. 'sqrt' is legal only on symbols with a
// declared sqrt alias; an aliased symbol X with X = u^2 parses as u^2.
// The printer emits within the same grammar, with explicit '*' and the
// numerator/denominator parenthesized.

namespace detail {

class CoeffParser {
public:
    CoeffParser(const std::string& text, TablePtr table)
        : text_(text), table_(std::move(table)) {}

    RatFunc run() {
        skip_ws();
        RatFunc v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return v;
    }

private:
    RatFunc expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        RatFunc acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                RatFunc t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                take();
                std::size_t at = pos_;
                RatFunc f = factor();
                if (c == '/' && f.is_zero()) throw ParseError("division by zero", at);
                acc = (c == '*') ? acc * f : acc / f;
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        RatFunc a = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            std::size_t at = pos_;
            long e = signed_int();
            if (e < 0 && a.is_zero()) throw ParseError("zero raised to a negative power", at);
            a = a.pow(static_cast<int>(e));
        }
        return a;
    }

    RatFunc atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            RatFunc v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::from_int(table_, integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name = symbol();
            if (name == "sqrt") {
                expect('(');
                std::size_t sat = pos_;
                std::string arg = symbol();
                expect(')');
                auto it = table_->sqrt_aliases().find(arg);
                if (it == table_->sqrt_aliases().end())
                    throw ParseError("sqrt of '" + arg + "' has no declared alias", sat);
                return RatFunc::indeterminate(table_, it->second);
            }
            if (table_->index_of(name) >= 0) return RatFunc::indeterminate(table_, name);
            auto it = table_->sqrt_aliases().find(name);
            if (it != table_->sqrt_aliases().end())
                return RatFunc::indeterminate(table_, it->second).pow(2);
            throw ParseError("unknown symbol '" + name + "'", at);
        }
        throw ParseError(pos_ == text_.size() ? "unexpected end of input"
                                              : std::string("unexpected character '") + c + "'",
                         pos_);
    }

    Int integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return Int(text_.substr(start, pos_ - start));
    }

    long signed_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = (take() == '-');
        skip_ws();
        Int v = integer();
        if (v > 1000000) throw ParseError("exponent too large", pos_);
        long e = v.convert_to<long>();
        return neg ? -e : e;
    }

    std::string symbol() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("expected symbol", pos_);
        return text_.substr(start, pos_ - start);
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        take();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    TablePtr table_;
    std::size_t pos_ = 0;
};

// One printed monomial factor list, e.g. "3*q^2*s". When unaliasing, even
// powers of an alias target u (with X = u^2) print as X^(e/2) and odd
// powers keep one explicit sqrt(X).
inline std::string print_term(const IndetTable& table, const Mono& m, const Int& coeff,
                              bool unalias) {
    std::string out;
    Int c = coeff < 0 ? Int(-coeff) : coeff;
    bool have = false;
    if (c != 1) {
        out += c.str();
        have = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        int e = m[i];
        if (e == 0) continue;
        const std::string* alias = unalias ? table.alias_for_index(i) : nullptr;
        auto emit = [&](const std::string& base, int exp) {
            if (exp == 0) return;
            if (have) out += '*';
            out += base;
            if (exp != 1) out += "^" + std::to_string(exp);
            have = true;
        };
        if (alias) {
            if (e % 2) emit("sqrt(" + *alias + ")", 1);
            emit(*alias, e / 2);
        } else {
            emit(table.name(i), e);
        }
    }
    if (!have) out += c.str();
    return out;
}

inline std::string print_poly(const IndetTable& table, const Poly& p, bool unalias) {
    if (p.is_zero()) return "0";
    std::string out;
    // Descending canonical order, leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        out += print_term(table, m, c, unalias);
    }
    return out;
}

}  // namespace detail

inline RatFunc parse_coeff(const std::string& text, TablePtr table) {
    return detail::CoeffParser(text, std::move(table)).run();
}

inline std::string print_coeff(const RatFunc& x, bool unalias = false) {
    const IndetTable& t = *x.table();
    if (x.den().is_constant() && x.den().constant_value() == 1) {
        if (x.num().term_count() <= 1) return detail::print_poly(t, x.num(), unalias);
        return "(" + detail::print_poly(t, x.num(), unalias) + ")";
    }
    return "(" + detail::print_poly(t, x.num(), unalias) + ")/(" +
           detail::print_poly(t, x.den(), unalias) + ")";
}

}  // namespace braidosc
