#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace braidosc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parse/eval failures carry enough context to report a usable message.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Missing symbols, poles, non-rational square roots.
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by zero, arity mismatches, degenerate parameters.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw DomainError("zero raised to a negative power");
        return Rat(0);
    }
    Rat acc(1);
    Rat b = base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return Rat(1) / acc;
    return acc;
}

inline std::optional<Int> int_sqrt_exact(const Int& v) {
    if (v < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

inline std::optional<Rat> rat_sqrt_exact(const Rat& v) {
    auto n = int_sqrt_exact(numerator(v));
    auto d = int_sqrt_exact(denominator(v));
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

// Accepts "p", "-p", "p/q" with big integers.
inline Rat parse_rational(const std::string& text) {
    auto bad = [&] { return DomainError("invalid rational literal: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw bad();
        if (den < 0) {  // cpp_rational requires a positive denominator
            den = -den;
            num = -num;
        }
        return Rat(num, den);
    } catch (const std::exception&) {
        throw bad();
    }
}

inline std::string rat_str(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace braidosc
