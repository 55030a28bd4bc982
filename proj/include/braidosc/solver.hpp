#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "braidosc/constraints.hpp"

namespace braidosc {

struct SolveOptions {
    long max_branches = 200000;
    bool reverse_order = false;  // flip tie-breaking; results must not change
};

struct EnumSolution {
    std::map<std::string, Rat> assignment;
    std::vector<std::string> free;   // unknowns left unconstrained (parametric leaf)
    std::vector<std::string> notes;  // side conditions that stayed symbolic

    bool complete() const { return free.empty(); }
    bool operator<(const EnumSolution& o) const {
        return std::tie(assignment, free) < std::tie(o.assignment, o.free);
    }
    bool operator==(const EnumSolution& o) const {
        return assignment == o.assignment && free == o.free;
    }
};

struct EnumerationResult {
    std::vector<EnumSolution> solutions;
    std::vector<std::string> abandoned;  // branches the elimination could not finish
    long branches_explored = 0;
    bool budget_exhausted = false;

    bool clean() const { return abandoned.empty() && !budget_exhausted; }
};

namespace detail {

// p with var := value, cleared of denominators (scales the equation by a
// positive constant power of the value's denominator).
inline Poly subst_value(const Poly& p, std::size_t var, const Rat& value) {
    int m = p.degree_in(var);
    if (m <= 0 && !p.depends_on(var)) return p;
    auto slices = coeffs_in(p, var);
    Int num = numerator(value), den = denominator(value);
    Poly out(p.nvars());
    for (const auto& [deg, coeff] : slices) {
        Int scale = 1;
        for (int t = 0; t < deg; ++t) scale *= num;
        for (int t = deg; t < m; ++t) scale *= den;
        out += coeff.scaled(scale);
    }
    return out;
}

// p with var := num/den, cleared of denominators: den^deg * p(var -> num/den).
inline Poly subst_ratio(const Poly& p, std::size_t var, const Poly& num, const Poly& den) {
    if (!p.depends_on(var)) return p;
    int m = p.degree_in(var);
    auto slices = coeffs_in(p, var);
    Poly out(p.nvars());
    for (const auto& [deg, coeff] : slices) {
        Poly t = coeff;
        for (int k = 0; k < deg; ++k) t = t * num;
        for (int k = deg; k < m; ++k) t = t * den;
        out += t;
    }
    return out;
}

inline Poly primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Int c = p.int_content();
    Poly q = (c > 1) ? p.int_divided(c) : p;
    return sign_normalized(q);
}

inline std::vector<Int> divisors_of(Int v, std::size_t cap = 4096) {
    if (v < 0) v = -v;
    std::vector<Int> primes;
    std::vector<int> mult;
    for (Int d = 2; d * d <= v && d < 100000; ++d) {
        if (v % d == 0) {
            primes.push_back(d);
            mult.push_back(0);
            while (v % d == 0) {
                v /= d;
                ++mult.back();
            }
        }
    }
    if (v > 1) {
        primes.push_back(v);
        mult.push_back(1);
    }
    std::vector<Int> divs{1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::size_t n = divs.size();
        Int pw = 1;
        for (int e = 1; e <= mult[i]; ++e) {
            pw *= primes[i];
            for (std::size_t j = 0; j < n; ++j) {
                divs.push_back(divs[j] * pw);
                if (divs.size() > cap) return divs;  // caller treats overflow as abandonment
            }
        }
    }
    return divs;
}

struct UnivariateRoots {
    std::vector<Rat> roots;
    int cofactor_degree = 0;  // > 0 when a nonconstant factor had no rational root
    bool divisor_overflow = false;
};

// Rational roots of an integer univariate polynomial (coefficient map
// degree -> value), by the rational root theorem with deflation.
inline UnivariateRoots rational_roots(std::map<int, Int> coeffs) {
    UnivariateRoots out;
    while (!coeffs.empty() && coeffs.rbegin()->second == 0) coeffs.erase(std::prev(coeffs.end()));
    if (coeffs.empty()) return out;
    // factor out x^s
    int shift = coeffs.begin()->first;
    if (shift > 0) {
        std::map<int, Int> shifted;
        for (const auto& [d, c] : coeffs) shifted[d - shift] = c;
        coeffs = std::move(shifted);
        out.roots.push_back(Rat(0));
    }
    // work over rationals for clean deflation
    int deg = coeffs.rbegin()->first;
    std::vector<Rat> poly(deg + 1, Rat(0));
    for (const auto& [d, c] : coeffs) poly[d] = Rat(c);
    auto eval = [&](const Rat& x) {
        Rat acc(0);
        for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d) acc = acc * x + poly[d];
        return acc;
    };
    auto deflate = [&](const Rat& r) {
        // divide by (x - r)
        std::vector<Rat> q(poly.size() - 1, Rat(0));
        Rat carry(0);
        for (int d = static_cast<int>(poly.size()) - 1; d >= 1; --d) {
            carry = poly[d] + carry;
            q[d - 1] = carry;
            carry = carry * r;
        }
        poly = std::move(q);
    };
    if (poly.size() > 1) {
        // candidates from the original integer coefficients; they stay valid
        // for every deflated cofactor
        auto p0 = divisors_of(numerator(poly.front()));
        auto pl = divisors_of(numerator(poly.back()));
        if (p0.size() > 4000 || pl.size() > 4000) out.divisor_overflow = true;
        std::set<Rat> candidates;
        for (const Int& p : p0)
            for (const Int& r : pl) {
                candidates.insert(Rat(p, r));
                candidates.insert(Rat(-p, r));
            }
        bool progress = true;
        while (progress && poly.size() > 1) {
            progress = false;
            if (poly.front() == 0) {  // fresh root at zero after deflation
                deflate(Rat(0));
                if (std::find(out.roots.begin(), out.roots.end(), Rat(0)) == out.roots.end())
                    out.roots.push_back(Rat(0));
                progress = true;
                continue;
            }
            for (const Rat& cand : candidates) {
                if (eval(cand) == 0) {
                    deflate(cand);
                    if (std::find(out.roots.begin(), out.roots.end(), cand) == out.roots.end())
                        out.roots.push_back(cand);
                    progress = true;
                    break;
                }
            }
        }
    }
    out.cofactor_degree = static_cast<int>(poly.size()) - 1;
    return out;
}

}  // namespace detail

// Case-splitting elimination over exact rationals: repeatedly pick an
// equation that is univariate or linear in some unknown, branch on factors
// or on the vanishing of the leading coefficient, substitute, and recurse.
// Every branch the engine cannot finish is reported, never dropped.
class Eliminator {
public:
    Eliminator(const ConstraintSystem& sys, SolveOptions opt = {}) : sys_(sys), opt_(opt) {
        if (!sys.base.empty())
            throw DomainError("enumeration needs a fully numeric constraint system");
    }

    EnumerationResult run() {
        EnumerationResult res;
        Node root;
        for (const auto& eq : sys_.eqs) root.eqs.push_back(eq.poly);
        std::deque<Node> stack;
        stack.push_back(std::move(root));
        while (!stack.empty()) {
            if (res.branches_explored >= opt_.max_branches) {
                res.budget_exhausted = true;
                res.abandoned.push_back(
                    std::to_string(stack.size()) + " branch(es) unexplored: branch budget " +
                    std::to_string(opt_.max_branches) + " exhausted");
                break;
            }
            ++res.branches_explored;
            Node node = std::move(stack.back());
            stack.pop_back();
            step(std::move(node), stack, res);
        }
        finalize(res);
        return res;
    }

private:
    struct Node {
        std::vector<Poly> eqs;
        std::map<std::size_t, Rat> assign;
        // deferred definitions var = -d/c recorded during elimination
        std::vector<std::tuple<std::size_t, Poly, Poly>> deferred;
        std::vector<Poly> nonzero;
    };

    const ConstraintSystem& sys_;
    SolveOptions opt_;

    void step(Node node, std::deque<Node>& stack, EnumerationResult& res) {
        // normalize: drop zeros, dedup, detect inconsistency
        std::set<Poly> keep;
        for (auto& p : node.eqs) {
            Poly n = detail::primitive(p);
            if (n.is_zero()) continue;
            if (n.is_constant()) return;  // 1 = 0: dead branch
            keep.insert(std::move(n));
        }
        node.eqs.assign(keep.begin(), keep.end());

        if (node.eqs.empty()) {
            emit_leaf(std::move(node), res);
            return;
        }

        // choose the structurally simplest equation
        auto score = [&](const Poly& p) {
            auto vars = p.variables();
            int mindeg = 1 << 20;
            for (auto v : vars) mindeg = std::min(mindeg, p.degree_in(v));
            return std::make_tuple(vars.size(), mindeg, p.term_count(), p.total_degree());
        };
        std::size_t best = 0;
        for (std::size_t i = 1; i < node.eqs.size(); ++i) {
            bool better = opt_.reverse_order ? score(node.eqs[i]) <= score(node.eqs[best])
                                             : score(node.eqs[i]) < score(node.eqs[best]);
            if (better) best = i;
        }
        Poly f = node.eqs[best];
        node.eqs.erase(node.eqs.begin() + best);
        auto vars = f.variables();

        if (vars.size() == 1) {
            univariate_branches(std::move(node), f, vars[0], stack, res);
            return;
        }

        // linear in some variable?
        std::size_t lin_var = 0;
        const Poly* lin_c = nullptr;
        std::map<int, Poly> lin_slices;
        auto better_coeff = [](const Poly& a, const Poly& b) {
            return std::make_pair(!a.is_constant(), a.term_count()) <
                   std::make_pair(!b.is_constant(), b.term_count());
        };
        for (auto v : vars) {
            if (f.degree_in(v) != 1) continue;
            auto slices = detail::coeffs_in(f, v);
            const Poly& c = slices.at(1);
            if (!lin_c || better_coeff(c, *lin_c)) {
                lin_var = v;
                lin_slices = slices;
                lin_c = &lin_slices.at(1);
            }
        }
        if (lin_c) {
            Poly c = lin_slices.at(1);
            Poly d = lin_slices.count(0) ? lin_slices.at(0) : Poly(f.nvars());
            if (c.is_constant()) {
                Node child = std::move(node);
                eliminate_ratio(child, lin_var, -d, c);
                stack.push_back(std::move(child));
            } else {
                Node zero = node;  // branch c = 0 (then d = 0 too)
                zero.eqs.push_back(c);
                zero.eqs.push_back(d);
                Node nz = std::move(node);  // branch c != 0
                nz.nonzero.push_back(c);
                eliminate_ratio(nz, lin_var, -d, c);
                push_pair(stack, std::move(zero), std::move(nz));
            }
            return;
        }

        // monomial factor x^k * h
        for (auto v : vars) {
            int minexp = 1 << 20;
            for (const auto& [m, c] : f.terms()) minexp = std::min(minexp, m[v]);
            if (minexp > 0) {
                Node zero = node;
                zero.assign.emplace(v, Rat(0));
                substitute_all(zero, v, Rat(0));
                Node nz = std::move(node);
                nz.nonzero.push_back(Poly::variable(f.nvars(), v));
                Poly h(f.nvars());
                for (const auto& [m, c] : f.terms()) {
                    Mono mm = m;
                    mm[v] -= minexp;
                    h.add_term(mm, c);
                }
                nz.eqs.push_back(h);
                push_pair(stack, std::move(zero), std::move(nz));
                return;
            }
        }

        res.abandoned.push_back("no univariate or variable-linear equation left; smallest: " +
                                poly_brief(f));
    }

    void univariate_branches(Node node, const Poly& f, std::size_t var, std::deque<Node>& stack,
                             EnumerationResult& res) {
        std::map<int, Int> coeffs;
        for (const auto& [deg, c] : detail::coeffs_in(f, var)) {
            if (!c.is_constant()) throw std::logic_error("univariate slice not constant");
            coeffs[deg] = c.constant_value();
        }
        auto rr = detail::rational_roots(std::move(coeffs));
        if (rr.divisor_overflow) {
            res.abandoned.push_back("divisor enumeration overflow for " + poly_brief(f));
            return;
        }
        if (rr.cofactor_degree > 0)
            res.abandoned.push_back("irreducible-over-Q factor of degree " +
                                    std::to_string(rr.cofactor_degree) + " in " +
                                    sys_.table->name(var) + " from " + poly_brief(f));
        std::vector<Rat> roots = rr.roots;
        if (opt_.reverse_order) std::reverse(roots.begin(), roots.end());
        for (const Rat& r : roots) {
            Node child = node;
            child.assign.emplace(var, r);
            substitute_all(child, var, r);
            stack.push_back(std::move(child));
        }
    }

    void eliminate_ratio(Node& node, std::size_t var, Poly num, Poly den) {
        for (auto& p : node.eqs) p = detail::subst_ratio(p, var, num, den);
        for (auto& p : node.nonzero) p = detail::subst_ratio(p, var, num, den);
        node.deferred.emplace_back(var, std::move(num), std::move(den));
    }

    void substitute_all(Node& node, std::size_t var, const Rat& value) {
        for (auto& p : node.eqs) p = detail::subst_value(p, var, value);
        for (auto& p : node.nonzero) p = detail::subst_value(p, var, value);
        for (auto& [v, num, den] : node.deferred) {
            num = detail::subst_value(num, var, value);
            den = detail::subst_value(den, var, value);
        }
    }

    void emit_leaf(Node node, EnumerationResult& res) {
        // resolve deferred definitions, most recent first
        std::vector<std::string> parametric;
        for (auto it = node.deferred.rbegin(); it != node.deferred.rend(); ++it) {
            auto& [var, num, den] = *it;
            if (!num.variables().empty() || !den.variables().empty()) {
                parametric.push_back(sys_.table->name(var));
                continue;
            }
            Int dv = den.constant_value();
            if (dv == 0) return;  // assumed c != 0 failed; covered by the sibling branch
            Int nv = num.constant_value();
            if (dv < 0) {  // cpp_rational requires a positive denominator
                dv = -dv;
                nv = -nv;
            }
            Rat value = Rat(nv, dv);
            node.assign.emplace(var, value);
            for (auto jt = it + 1; jt != node.deferred.rend(); ++jt) {
                std::get<1>(*jt) = detail::subst_value(std::get<1>(*jt), var, value);
                std::get<2>(*jt) = detail::subst_value(std::get<2>(*jt), var, value);
            }
        }
        EnumSolution sol;
        for (const auto& [v, r] : node.assign) sol.assignment.emplace(sys_.table->name(v), r);
        std::set<std::string> covered;
        for (const auto& [n, r] : sol.assignment) covered.insert(n);
        for (const auto& p : parametric) covered.erase(p);
        for (const auto& u : sys_.unknowns)
            if (!covered.count(u)) sol.free.push_back(u);
        // side conditions
        for (const auto& p : node.nonzero) {
            if (p.variables().empty()) {
                if (p.constant_value() == 0) return;  // contradiction; sibling covers c = 0
            } else {
                sol.notes.push_back("requires " + poly_brief(p) + " != 0");
            }
        }
        res.solutions.push_back(std::move(sol));
    }

    void push_pair(std::deque<Node>& stack, Node a, Node b) {
        if (opt_.reverse_order) {
            stack.push_back(std::move(b));
            stack.push_back(std::move(a));
        } else {
            stack.push_back(std::move(a));
            stack.push_back(std::move(b));
        }
    }

    std::string poly_brief(const Poly& p) const {
        RatFunc f = RatFunc::from_polys(sys_.table, p, Poly::constant(sys_.table->size(), 1));
        std::string s = print_coeff(f);
        if (s.size() > 120) s = s.substr(0, 117) + "...";
        return s;
    }

    void finalize(EnumerationResult& res) {
        std::sort(res.solutions.begin(), res.solutions.end());
        res.solutions.erase(std::unique(res.solutions.begin(), res.solutions.end()),
                            res.solutions.end());
    }
};

inline EnumerationResult enumerate_solutions(const ConstraintSystem& sys, SolveOptions opt = {}) {
    return Eliminator(sys, opt).run();
}

// Match enumerated assignments against instantiated catalog rows: every
// enumerated solution must equal some catalog instantiation on all unknowns
// and vice versa.
struct CatalogMatch {
    std::vector<std::string> matched;    // provenance per enumerated solution
    std::vector<std::string> unmatched;  // enumerated solutions with no catalog row
    std::vector<std::string> missing;    // catalog rows not found by enumeration
    bool exact() const { return unmatched.empty() && missing.empty(); }
};

inline CatalogMatch match_against_catalog(const EnumerationResult& res,
                                          const ConstraintSystem& sys,
                                          const std::vector<const HopfSolution*>& rows,
                                          const std::map<std::string, Rat>& assignment) {
    CatalogMatch out;
    std::vector<std::map<std::string, Rat>> instantiated;
    for (const auto* row : rows) {
        auto resolved = row->resolve_assignment(assignment);
        std::map<std::string, Rat> vals;
        for (const auto& u : sys.unknowns) vals[u] = row->value(u).evaluate(resolved);
        instantiated.push_back(std::move(vals));
    }
    std::vector<bool> seen(rows.size(), false);
    for (const auto& sol : res.solutions) {
        if (!sol.complete()) {
            out.unmatched.push_back("parametric solution (free: " +
                                    (sol.free.empty() ? "" : sol.free.front()) + "...)");
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (instantiated[i] == sol.assignment) {
                out.matched.push_back(rows[i]->provenance());
                seen[i] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            std::string desc = "{";
            for (const auto& [n, v] : sol.assignment)
                if (v != 0) desc += n + "=" + rat_str(v) + " ";
            out.unmatched.push_back(desc + "}");
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!seen[i]) out.missing.push_back(rows[i]->provenance());
    return out;
}

}  // namespace braidosc
