#pragma once

#include <set>
#include <string>
#include <vector>

#include "braidosc/ansatz.hpp"

namespace braidosc {

// One polynomial equation (= 0) in the unknown structure constants, tagged
// by the axiom instance it came from.
struct Constraint {
    Poly poly;
    std::string family;
    std::string instance;
};

struct ConstraintSystem {
    TablePtr table;
    std::vector<std::string> base;      // declared-nonzero background symbols
    std::vector<std::string> unknowns;
    std::vector<Constraint> eqs;        // content-free, sign-normalized, deduplicated
};

namespace detail {

template <class K>
struct EquationSink;

template <>
struct EquationSink<RatFunc> : ResidualSink<RatFunc> {
    ConstraintSystem* sys = nullptr;
    std::set<Poly> seen;

    void take(const std::string& family, const std::string& instance, const RatFunc& coeff) {
        if (coeff.is_zero()) return;
        // Denominators may involve only the declared-nonzero base symbols.
        for (std::size_t v : coeff.den().variables()) {
            const std::string& name = sys->table->name(v);
            bool in_base = false;
            for (const auto& b : sys->base) in_base |= (b == name);
            if (!in_base)
                throw std::logic_error("constraint denominator contains unknown '" + name + "'");
        }
        Poly p = coeff.num();
        Int c = p.int_content();
        if (c > 1) p = p.int_divided(c);
        p = sign_normalized(p);
        // A nonzero constant equation marks the configuration unsatisfiable;
        // keep it so downstream consumers report that honestly.
        if (seen.insert(p).second) sys->eqs.push_back({p, family, instance});
    }

    void handle(const std::string& family, const std::string& instance,
                const Tensor<RatFunc>& r) override {
        for (const auto& [key, c] : r.terms()) take(family, instance, c);
    }
    void handle(const std::string& family, const std::string& instance,
                const Element<RatFunc>& r) override {
        for (const auto& [m, c] : r.terms()) take(family, instance, c);
    }
    void handle(const std::string& family, const std::string& instance,
                const RatFunc& r) override {
        take(family, instance, r);
    }
};

}  // namespace detail

// Substitute the full ansatz into every axiom family and collect the
// coefficient of each independent basis monomial as one polynomial equation.
inline ConstraintSystem generate_constraints(const Ansatz& a) {
    ConstraintSystem sys;
    sys.table = a.table;
    sys.base = a.base;
    sys.unknowns = a.unknowns;
    detail::EquationSink<RatFunc> sink;
    sink.sys = &sys;
    AxiomChecker<RatFunc>(a.generic, sink).run();
    return sys;
}

struct ResidualFailure {
    std::string family;
    std::string instance;
    std::string equation;
    std::string residual;
};

struct ResidualReport {
    std::size_t checked = 0;
    std::vector<ResidualFailure> failures;
    bool pass() const { return failures.empty(); }
};

// Substitute a catalogued solution into every equation of the system; the
// solution passes iff every residual is identically zero. Free symbols of
// the solution stay symbolic, so a pass verifies the whole family.
inline ResidualReport residual_check(const ConstraintSystem& sys, const HopfSolution& sol) {
    ResidualReport out;
    std::map<std::string, RatFunc> subst;
    for (const auto& name : sys.table->names()) {
        bool unknown =
            std::find(sys.unknowns.begin(), sys.unknowns.end(), name) != sys.unknowns.end();
        if (unknown) {
            subst.emplace(name, sol.value(name));
        } else {
            if (sol.indets->index_of(name) < 0)
                throw DomainError("solution table lacks background symbol '" + name + "'");
            subst.emplace(name, RatFunc::indeterminate(sol.indets, name));
        }
    }
    for (const auto& eq : sys.eqs) {
        RatFunc num = RatFunc::from_polys(sys.table, eq.poly, Poly::constant(sys.table->size(), 1));
        RatFunc r = num.substitute(subst, sol.indets);
        ++out.checked;
        if (!r.is_zero())
            out.failures.push_back({eq.family, eq.instance,
                                    print_coeff(num), print_coeff(r, true)});
    }
    return out;
}

}  // namespace braidosc
