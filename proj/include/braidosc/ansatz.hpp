#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidosc/catalog.hpp"

namespace braidosc {

// The generic structure whose constants are indeterminates except where the
// configuration pins them. Fixed entries are grammar strings over the base
// indeterminates; every constant not fixed becomes an unknown.
struct Ansatz {
    TablePtr table;                      // base indeterminates ++ unknowns
    std::vector<std::string> base;       // e.g. {"q","s"} or {} in numeric mode
    std::vector<std::string> unknowns;   // in canonical constant order
    Structure<RatFunc> generic;
    std::map<std::string, RatFunc> values;  // per-constant view of the ansatz
};

inline Ansatz make_ansatz(const std::vector<std::string>& base_indets,
                          const std::map<std::string, std::string>& sqrt_aliases,
                          const std::map<std::string, std::string>& fixed) {
    Ansatz a;
    a.base = base_indets;
    std::vector<std::string> names = base_indets;
    for (const auto& n : constant_names())
        if (!fixed.count(n)) {
            a.unknowns.push_back(n);
            names.push_back(n);
        }
    a.table = make_table(names, sqrt_aliases);

    auto value_of = [&](const std::string& name) {
        auto it = fixed.find(name);
        if (it != fixed.end()) return parse_coeff(it->second, a.table);
        return RatFunc::indeterminate(a.table, name);
    };
    for (const auto& n : constant_names()) a.values.emplace(n, value_of(n));

    auto qit = fixed.find("q");
    RatFunc qv = (qit != fixed.end()) ? parse_coeff(qit->second, a.table)
                                      : RatFunc::indeterminate(a.table, "q");
    a.generic = build_structure<RatFunc>(a.values, qv);
    return a;
}

// Ready-made configurations.

// First type: q^{2N} on the right-hand side, Q1 pinned, Q3 and Q4 left as
// unknowns that the axioms must force to zero.
inline Ansatz ansatz_type1_numeric(const Rat& q, const Rat& Q1) {
    return make_ansatz({}, {},
                       {{"q", rat_str(q)}, {"Q1", rat_str(Q1)}, {"Q2", "1"}});
}

inline Ansatz ansatz_type1_symbolic() {
    return make_ansatz({"q", "s"}, {{"Q1", "s"}}, {{"q", "q"}, {"Q1", "Q1"}, {"Q2", "1"}});
}

// Second type: q^N on the right-hand side.
inline Ansatz ansatz_type2_numeric(const Rat& q, const Rat& Q1) {
    return make_ansatz({}, {},
                       {{"q", rat_str(q)}, {"Q1", rat_str(Q1)}, {"Q3", "1"}});
}

inline Ansatz ansatz_type2_symbolic() {
    return make_ansatz({"q", "Q1"}, {}, {{"q", "q"}, {"Q1", "Q1"}, {"Q3", "1"}});
}

// Braided 3-space: aa* = q a*a.
inline Ansatz ansatz_space_numeric(const Rat& q) {
    return make_ansatz({}, {},
                       {{"q", rat_str(q)},
                        {"Q1", rat_str(q)},
                        {"Q2", "0"},
                        {"Q3", "0"},
                        {"Q4", "0"}});
}

inline Ansatz ansatz_space_symbolic() {
    return make_ansatz({"q"}, {},
                       {{"q", "q"}, {"Q1", "q"}, {"Q2", "0"}, {"Q3", "0"}, {"Q4", "0"}});
}

// Undeformed limit with the braiding pinned to the permutation.
inline Ansatz ansatz_classical() {
    std::map<std::string, std::string> fixed{{"q", "1"}, {"Q1", "1"}, {"Q2", "0"}, {"Q3", "0"}};
    const char* zeros[] = {"g2", "g3", "g4", "g5", "g6", "d2", "d3", "d4", "f2", "f3", "f4",
                           "b1", "b2", "b4", "b5", "b6", "c1", "c3", "c4", "c5", "c6"};
    for (const char* n : zeros) fixed[n] = "0";
    fixed["g1"] = "1";
    fixed["d1"] = "1";
    fixed["f1"] = "1";
    fixed["z"] = "1";
    fixed["b3"] = "1";
    fixed["c2"] = "1";
    return make_ansatz({}, {}, fixed);
}

}  // namespace braidosc
