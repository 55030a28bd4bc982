#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidosc/axioms.hpp"
#include "braidosc/coeff_io.hpp"
#include "braidosc/hopf.hpp"

namespace braidosc {

inline const std::vector<std::string>& constant_names() {
    static const std::vector<std::string> names = {
        "Q1", "Q2", "Q3", "Q4",
        "A1", "A2", "A3", "A4", "A5", "A6",
        "B1", "B2", "B3", "B4",
        "e1", "e2",
        "k1", "k2", "k3", "k4",
        "m1", "m2", "m3", "m4",
        "g1", "g2", "g3", "g4", "g5", "g6",
        "d1", "d2", "d3", "d4",
        "f1", "f2", "f3", "f4",
        "z",
        "b1", "b2", "b3", "b4", "b5", "b6",
        "c1", "c2", "c3", "c4", "c5", "c6"};
    return names;
}

// One catalogued braided Hopf structure, fully symbolic over its own
// indeterminate table. Free symbols stay indeterminates.
struct HopfSolution {
    std::string table_id;
    std::string sol_id;
    std::string annotation;  // specializations applied, if any
    TablePtr indets;
    std::vector<std::string> free_symbols;
    std::map<std::string, RatFunc> values;         // all entries of constant_names()
    std::map<std::string, Rat> default_assignment; // generic numeric point

    std::string provenance() const {
        std::string p = "table" + table_id + "/" + sol_id;
        if (!annotation.empty()) p += "[" + annotation + "]";
        return p;
    }

    RatFunc q() const { return RatFunc::indeterminate(indets, "q"); }

    const RatFunc& value(const std::string& name) const {
        auto it = values.find(name);
        if (it == values.end()) throw DomainError("unknown constant '" + name + "'");
        return it->second;
    }

    Structure<RatFunc> structure() const;

    // Resolve a numeric assignment against the table: indeterminates take
    // their value directly; an aliased composite symbol X with X = u^2
    // assigns u = sqrt(X), which must be an exact rational square root.
    std::map<std::string, Rat> resolve_assignment(
        const std::map<std::string, Rat>& given) const {
        std::map<std::string, Rat> out;
        std::set<std::string> used;
        for (const auto& nm : indets->names()) {
            auto it = given.find(nm);
            if (it != given.end()) {
                out[nm] = it->second;
                used.insert(nm);
                continue;
            }
            const std::string* alias = indets->alias_for_index(indets->index_of(nm));
            if (alias) {
                auto ai = given.find(*alias);
                if (ai != given.end()) {
                    auto r = rat_sqrt_exact(ai->second);
                    if (!r)
                        throw EvalError("sqrt(" + *alias + ") is irrational at " + *alias + "=" +
                                        rat_str(ai->second) + "; pick a rational square");
                    out[nm] = *r;
                    used.insert(*alias);
                    continue;
                }
            }
            throw EvalError("no value assigned to '" + nm + "'");
        }
        for (const auto& [k, v] : given)
            if (!used.count(k)) throw EvalError("assignment for unknown symbol '" + k + "'");
        return out;
    }

    Structure<Rat> instantiate(const std::map<std::string, Rat>& given) const;

    Structure<Rat> instantiate_default() const { return instantiate(default_assignment); }
};

// Assemble the typed structure from a by-name constant map.
template <class K>
Structure<K> build_structure(const std::map<std::string, K>& v, const K& qv) {
    Structure<K> s;
    auto g = [&](const char* n) { return v.at(n); };
    s.osc = {qv, g("Q1"), g("Q2"), g("Q3"), g("Q4"), false};
    s.consts = {g("A1"), g("A2"), g("A3"), g("A4"), g("A5"), g("A6"),
                g("B1"), g("B2"), g("B3"), g("B4"),
                g("e1"), g("e2"),
                g("k1"), g("k2"), g("k3"), g("k4"),
                g("m1"), g("m2"), g("m3"), g("m4")};
    s.braid = {g("g1"), g("g2"), g("g3"), g("g4"), g("g5"), g("g6"),
               g("d1"), g("d2"), g("d3"), g("d4"),
               g("f1"), g("f2"), g("f3"), g("f4"),
               g("z"),
               g("b1"), g("b2"), g("b3"), g("b4"), g("b5"), g("b6"),
               g("c1"), g("c2"), g("c3"), g("c4"), g("c5"), g("c6")};
    return s;
}

inline Structure<RatFunc> HopfSolution::structure() const {
    return build_structure<RatFunc>(values, q());
}

inline Structure<Rat> HopfSolution::instantiate(const std::map<std::string, Rat>& given) const {
    auto a = resolve_assignment(given);
    std::map<std::string, Rat> v;
    for (const auto& [name, val] : values) v.emplace(name, val.evaluate(a));
    return build_structure<Rat>(v, a.at("q"));
}

namespace detail {

inline void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw DomainError("catalog: unknown key '" + it.key() + "' in " + where);
}

}  // namespace detail

class Catalog {
public:
    static Catalog load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open catalog file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return load_string(ss.str());
    }

    static Catalog load_string(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const std::exception& e) {
            throw DomainError(std::string("catalog: malformed JSON: ") + e.what());
        }
        return Catalog(j);
    }

    const std::string& version() const { return version_; }
    const std::vector<HopfSolution>& solutions() const { return sols_; }
    const std::vector<std::string>& table_ids() const { return table_ids_; }

    std::vector<const HopfSolution*> table(const std::string& table_id) const {
        std::vector<const HopfSolution*> out;
        for (const auto& s : sols_)
            if (s.table_id == table_id) out.push_back(&s);
        return out;
    }

    const HopfSolution& solution(const std::string& table_id, const std::string& sol_id) const {
        for (const auto& s : sols_)
            if (s.table_id == table_id && s.sol_id == sol_id) return s;
        throw DomainError("no catalog entry table" + table_id + "/" + sol_id);
    }

private:
    explicit Catalog(const nlohmann::json& j) {
        detail::require_keys(j, {"catalog_version", "defaults", "tables"}, "top level");
        version_ = j.at("catalog_version").get<std::string>();
        if (version_ != "1")
            throw DomainError("catalog: unsupported catalog_version '" + version_ + "'");
        std::map<std::string, std::string> defaults;
        for (auto it = j.at("defaults").begin(); it != j.at("defaults").end(); ++it)
            defaults[it.key()] = it.value().get<std::string>();

        for (const auto& jt : j.at("tables")) {
            detail::require_keys(jt,
                                 {"id", "name", "indeterminates", "sqrt_aliases", "relation",
                                  "common", "default_assignment", "solutions"},
                                 "table");
            std::string tid = jt.at("id").get<std::string>();
            table_ids_.push_back(tid);
            std::vector<std::string> indets =
                jt.at("indeterminates").get<std::vector<std::string>>();
            std::map<std::string, std::string> aliases;
            if (jt.contains("sqrt_aliases"))
                for (auto it = jt.at("sqrt_aliases").begin(); it != jt.at("sqrt_aliases").end();
                     ++it)
                    aliases[it.key()] = it.value().get<std::string>();

            std::map<std::string, std::string> table_level = defaults;
            if (jt.contains("relation"))
                for (auto it = jt.at("relation").begin(); it != jt.at("relation").end(); ++it)
                    table_level[it.key()] = it.value().get<std::string>();
            if (jt.contains("common"))
                for (auto it = jt.at("common").begin(); it != jt.at("common").end(); ++it)
                    table_level[it.key()] = it.value().get<std::string>();

            for (const auto& js : jt.at("solutions")) {
                detail::require_keys(js, {"id", "free_symbols", "relation", "constants"},
                                     "solution");
                HopfSolution s;
                s.table_id = tid;
                s.sol_id = js.at("id").get<std::string>();
                std::string where = "table" + tid + "/" + s.sol_id;

                std::vector<std::string> names = indets;
                if (js.contains("free_symbols")) {
                    s.free_symbols = js.at("free_symbols").get<std::vector<std::string>>();
                    for (const auto& f : s.free_symbols) names.push_back(f);
                }
                s.indets = make_table(names, aliases);
                if (s.indets->index_of("q") < 0)
                    throw DomainError("catalog: " + where + " does not declare q");

                std::map<std::string, std::string> strings = table_level;
                if (js.contains("relation"))
                    for (auto it = js.at("relation").begin(); it != js.at("relation").end(); ++it)
                        strings[it.key()] = it.value().get<std::string>();
                for (auto it = js.at("constants").begin(); it != js.at("constants").end(); ++it)
                    strings[it.key()] = it.value().get<std::string>();

                std::set<std::string> known(constant_names().begin(), constant_names().end());
                for (const auto& [name, text] : strings) {
                    if (!known.count(name))
                        throw DomainError("catalog: unknown constant '" + name + "' in " + where);
                    RatFunc v;
                    try {
                        v = parse_coeff(text, s.indets);
                    } catch (const ParseError& e) {
                        throw DomainError("catalog: " + where + " constant " + name + ": " +
                                          e.what());
                    }
                    if (parse_coeff(print_coeff(v), s.indets) != v ||
                        parse_coeff(print_coeff(v, true), s.indets) != v)
                        throw DomainError("catalog: " + where + " constant " + name +
                                          " fails print/parse round-trip");
                    s.values.emplace(name, v);
                }
                for (const auto& name : constant_names())
                    if (!s.values.count(name))
                        throw DomainError("catalog: " + where + " is missing constant " + name);

                if (jt.contains("default_assignment"))
                    for (auto it = jt.at("default_assignment").begin();
                         it != jt.at("default_assignment").end(); ++it) {
                        const std::string key = it.key();
                        if (s.indets->index_of(key) < 0 && !aliases.count(key)) continue;
                        s.default_assignment[key] = parse_rational(it.value().get<std::string>());
                    }
                sols_.push_back(std::move(s));
            }
        }
    }

    std::string version_;
    std::vector<std::string> table_ids_;
    std::vector<HopfSolution> sols_;
};

// Substitute one symbol of a solution by an expression in the remaining
// indeterminates. Substituting an aliased composite X (with X = u^2)
// replaces u by the exact square root of the expression, so the expression
// must be a perfect-square monomial.
inline HopfSolution specialize(const HopfSolution& sol, const std::string& name,
                               const std::string& expr) {
    std::string removed;
    if (sol.indets->sqrt_aliases().count(name))
        removed = sol.indets->sqrt_aliases().at(name);
    else if (sol.indets->index_of(name) >= 0)
        removed = name;
    else
        throw DomainError("cannot specialize unknown symbol '" + name + "'");

    std::vector<std::string> names;
    for (const auto& n : sol.indets->names())
        if (n != removed) names.push_back(n);
    std::map<std::string, std::string> aliases = sol.indets->sqrt_aliases();
    aliases.erase(name);
    TablePtr target = make_table(names, aliases);

    RatFunc value = parse_coeff(expr, target);
    std::map<std::string, RatFunc> subst;
    if (removed != name) {
        auto root = value.sqrt_monomial();
        if (!root)
            throw DomainError("cannot set " + name + " = " + expr +
                              ": no exact square root for sqrt(" + name + ")");
        subst[removed] = *root;
    } else {
        subst[removed] = value;
    }
    for (const auto& n : names) subst[n] = RatFunc::indeterminate(target, n);

    HopfSolution out = sol;
    out.indets = target;
    out.annotation = sol.annotation.empty() ? name + "=" + expr
                                            : sol.annotation + "," + name + "=" + expr;
    out.free_symbols.clear();
    for (const auto& f : sol.free_symbols)
        if (f != removed) out.free_symbols.push_back(f);
    out.values.clear();
    for (const auto& [n, v] : sol.values) out.values.emplace(n, v.substitute(subst, target));
    out.default_assignment.erase(name);
    out.default_assignment.erase(removed);
    return out;
}

// Replace one structure constant (keeping the table); used for mutation
// controls and --override.
inline HopfSolution override_constant(const HopfSolution& sol, const std::string& name,
                                      const std::string& expr) {
    HopfSolution out = sol;
    if (!out.values.count(name)) throw DomainError("unknown constant '" + name + "'");
    out.values[name] = parse_coeff(expr, out.indets);
    out.annotation = sol.annotation.empty() ? name + ":=" + expr
                                            : sol.annotation + "," + name + ":=" + expr;
    return out;
}

// Named specializations derived from the catalog: the one-parameter
// oscillators obtained by pinning the deformation parameter, and the
// literature case of the braided 3-space.
struct DerivedSpec {
    std::string id;          // "bm1", "bm2", "lit"
    std::string base_table;
    std::string symbol;
    std::string expr;
};

inline const std::vector<DerivedSpec>& derived_specs() {
    static const std::vector<DerivedSpec> specs = {
        {"bm1", "1", "Q1", "q^-2"},
        {"bm2", "3", "Q1", "q^-1"},
        {"lit", "4", "g1", "q^2"},
    };
    return specs;
}

inline std::vector<HopfSolution> derived_solutions(const Catalog& cat, const std::string& id) {
    for (const auto& d : derived_specs()) {
        if (d.id != id) continue;
        std::vector<HopfSolution> out;
        if (d.id == "lit") {
            out.push_back(specialize(cat.solution("4", "sol5"), d.symbol, d.expr));
        } else {
            for (const auto* s : cat.table(d.base_table))
                out.push_back(specialize(*s, d.symbol, d.expr));
        }
        return out;
    }
    throw DomainError("unknown derived set '" + id + "'");
}

// ---- checker entry points ----------------------------------------------

inline AxiomReport check_axioms_symbolic(const HopfSolution& sol) {
    AxiomReport r = check_axioms(sol.structure());
    r.provenance = sol.provenance();
    r.mode = "symbolic";
    return r;
}

inline AxiomReport check_axioms_numeric(const HopfSolution& sol,
                                        const std::map<std::string, Rat>& given) {
    auto resolved = sol.resolve_assignment(given);
    AxiomReport r = check_axioms(sol.instantiate(given));
    r.provenance = sol.provenance();
    r.mode = "numeric";
    for (const auto& nm : sol.indets->names())
        r.assignment.emplace_back(nm, rat_str(resolved.at(nm)));
    return r;
}

}  // namespace braidosc
