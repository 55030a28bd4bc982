#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidosc/hopf.hpp"

namespace braidosc {

struct AxiomCheck {
    std::string family;
    std::string instance;
    bool pass;
    std::string residual;  // nonzero witness when pass is false
};

struct AxiomReport {
    std::string provenance;
    std::string mode;  // "symbolic" or "numeric"
    std::vector<std::pair<std::string, std::string>> assignment;
    std::vector<AxiomCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += !c.pass;
        return n;
    }
};

namespace detail {

// One side of a defining relation as a formal sum of words.
template <class K>
using WordSum = std::vector<std::pair<K, Word>>;

template <class K>
std::vector<std::pair<WordSum<K>, WordSum<K>>> defining_relations(const OscillatorParams<K>& p) {
    const K one = one_like(p.q);
    std::vector<std::pair<WordSum<K>, WordSum<K>>> rels;
    rels.push_back({{{one, {Gen::A, Gen::QN}}}, {{p.q, {Gen::QN, Gen::A}}}});
    rels.push_back({{{one, {Gen::QN, Gen::AStar}}}, {{p.q, {Gen::AStar, Gen::QN}}}});
    rels.push_back({{{one, {Gen::A, Gen::AStar}}},
                    {{p.Q1, {Gen::AStar, Gen::A}},
                     {p.Q2, {Gen::QN, Gen::QN}},
                     {p.Q3, {Gen::QN}},
                     {p.Q4, {}}}});
    return rels;
}

inline const char* rel_name(std::size_t i) {
    switch (i) {
        case 0: return "a.q^N";
        case 1: return "q^N.a^*";
        default: return "a.a^*";
    }
}

}  // namespace detail

// Receives one residual per axiom instance; a residual of zero means the
// instance holds. Implementations turn residuals into pass/fail reports or
// into polynomial constraints on unknown structure constants.
template <class K>
struct ResidualSink {
    virtual ~ResidualSink() = default;
    virtual void handle(const std::string& family, const std::string& instance,
                        const Tensor<K>& residual) = 0;
    virtual void handle(const std::string& family, const std::string& instance,
                        const Element<K>& residual) = 0;
    virtual void handle(const std::string& family, const std::string& instance,
                        const K& residual) = 0;
};

// Runs every axiom family on the generator tuples its arity demands, the
// unit consistency conditions, relation compatibility of all four structure
// maps, and the star conditions. All comparisons are exact equalities of
// canonical forms.
template <class K>
class AxiomChecker {
public:
    AxiomChecker(const Structure<K>& s, ResidualSink<K>& sink) : maps_(s), sink_(sink) {}

    void run() {
        AxiomReport r;
        family_mul_assoc(r);
        family_unit(r);
        family_coassoc(r);
        family_counit(r);
        family_antipode(r);
        family_hexagons(r);
        family_braid_coproduct(r);
        family_coproduct_mult(r);
        family_antipode_mult(r);
        family_coproduct_antipode(r);
        family_counit_mult(r);
        family_yang_baxter(r);
        family_unit_conditions(r);
        family_relation_compat(r);
        family_star(r);
    }

    const HopfMaps<K>& maps() const { return maps_; }

private:
    static constexpr Gen kGens[3] = {Gen::AStar, Gen::QN, Gen::A};

    const OscillatorParams<K>& osc() const { return maps_.osc(); }
    const Braiding<K>& psi() const { return maps_.braiding(); }

    Element<K> gen_elem(Gen g) const { return Element<K>::generator(g, maps_.one()); }

    Tensor<K> base(std::initializer_list<Gen> gs) const {
        std::vector<Element<K>> slots;
        for (Gen g : gs) slots.push_back(gen_elem(g));
        return Tensor<K>::outer(slots);
    }

    auto delta_fn() const {
        return [this](const NormalMonomial& m) { return maps_.coproduct_mono(m); };
    }
    auto s_fn() const {
        return [this](const NormalMonomial& m) { return maps_.antipode_mono(m); };
    }
    auto star_fn() const {
        return [this](const NormalMonomial& m) {
            return Element<K>::monomial(star(m), maps_.one());
        };
    }

    template <class R>
    void report(AxiomReport&, const std::string& family, const std::string& instance,
                const R& residual) {
        sink_.handle(family, instance, residual);
    }

    static std::string names(std::initializer_list<Gen> gs) {
        std::string out;
        for (Gen g : gs) {
            if (!out.empty()) out += ",";
            out += gen_name(g);
        }
        return out;
    }

    void family_mul_assoc(AxiomReport& r) {
        for (Gen x : kGens)
            for (Gen y : kGens)
                for (Gen z : kGens) {
                    Element<K> lhs =
                        mul(mul(gen_elem(x), gen_elem(y), osc()), gen_elem(z), osc());
                    Element<K> rhs =
                        mul(gen_elem(x), mul(gen_elem(y), gen_elem(z), osc()), osc());
                    report(r, "mul-assoc", names({x, y, z}), lhs - rhs);
                }
    }

    void family_unit(AxiomReport& r) {
        Element<K> unit = Element<K>::unit(maps_.one());
        for (Gen x : kGens) {
            Element<K> e = gen_elem(x);
            report(r, "mul-unit-right", names({x}), mul(e, unit, osc()) - e);
            report(r, "mul-unit-left", names({x}), mul(unit, e, osc()) - e);
        }
    }

    void family_coassoc(AxiomReport& r) {
        for (Gen x : kGens) {
            Tensor<K> d = maps_.coproduct_gen(x);
            report(r, "coassoc", names({x}),
                   expand_slot(d, 0, delta_fn()) - expand_slot(d, 1, delta_fn()));
        }
    }

    void family_counit(AxiomReport& r) {
        auto eps = [this](const NormalMonomial& m) { return maps_.counit_mono(m); };
        for (Gen x : kGens) {
            Tensor<K> d = maps_.coproduct_gen(x);
            Element<K> left = as_element(fold_slot(d, 0, eps));
            Element<K> right = as_element(fold_slot(d, 1, eps));
            report(r, "counit-left", names({x}), left - gen_elem(x));
            report(r, "counit-right", names({x}), right - gen_elem(x));
        }
    }

    void family_antipode(AxiomReport& r) {
        for (Gen x : kGens) {
            Tensor<K> d = maps_.coproduct_gen(x);
            Element<K> target = Element<K>::unit(maps_.one()).scaled(maps_.counit_gen(x));
            Element<K> left = as_element(mul_slots(map_slot(d, 0, s_fn()), 0, osc()));
            Element<K> right = as_element(mul_slots(map_slot(d, 1, s_fn()), 0, osc()));
            report(r, "antipode-left", names({x}), left - target);
            report(r, "antipode-right", names({x}), right - target);
        }
    }

    void family_hexagons(AxiomReport& r) {
        for (Gen x : kGens)
            for (Gen y : kGens)
                for (Gen z : kGens) {
                    Tensor<K> t = base({x, y, z});
                    {
                        Tensor<K> lhs = psi().braid(
                            Tensor<K>::outer({mul(gen_elem(x), gen_elem(y), osc()), gen_elem(z)}));
                        Tensor<K> rhs = mul_slots(braid_slots(braid_slots(t, 1, psi()), 0, psi()),
                                                  1, osc());
                        report(r, "hexagon-m-left", names({x, y, z}), lhs - rhs);
                    }
                    {
                        Tensor<K> lhs = psi().braid(
                            Tensor<K>::outer({gen_elem(x), mul(gen_elem(y), gen_elem(z), osc())}));
                        Tensor<K> rhs = mul_slots(braid_slots(braid_slots(t, 0, psi()), 1, psi()),
                                                  0, osc());
                        report(r, "hexagon-m-right", names({x, y, z}), lhs - rhs);
                    }
                }
    }

    void family_braid_coproduct(AxiomReport& r) {
        for (Gen x : kGens)
            for (Gen y : kGens) {
                Tensor<K> pxy = psi().braid(base({x, y}));
                {
                    Tensor<K> lhs = expand_slot(pxy, 1, delta_fn());
                    Tensor<K> start = expand_slot(base({x, y}), 0, delta_fn());
                    Tensor<K> rhs = braid_slots(braid_slots(start, 1, psi()), 0, psi());
                    report(r, "braid-coproduct-right", names({x, y}), lhs - rhs);
                }
                {
                    Tensor<K> lhs = expand_slot(pxy, 0, delta_fn());
                    Tensor<K> start = expand_slot(base({x, y}), 1, delta_fn());
                    Tensor<K> rhs = braid_slots(braid_slots(start, 0, psi()), 1, psi());
                    report(r, "braid-coproduct-left", names({x, y}), lhs - rhs);
                }
            }
    }

    void family_coproduct_mult(AxiomReport& r) {
        for (Gen x : kGens)
            for (Gen y : kGens) {
                Tensor<K> lhs = maps_.coproduct(mul(gen_elem(x), gen_elem(y), osc()));
                // literal (m (x) m) . (id (x) psi (x) id) . (Delta (x) Delta)
                Tensor<K> four =
                    expand_slot(expand_slot(base({x, y}), 1, delta_fn()), 0, delta_fn());
                Tensor<K> rhs = mul_slots(mul_slots(braid_slots(four, 1, psi()), 2, osc()), 0, osc());
                report(r, "coproduct-mult", names({x, y}), lhs - rhs);
            }
    }

    void family_antipode_mult(AxiomReport& r) {
        for (Gen x : kGens)
            for (Gen y : kGens) {
                Element<K> lhs = maps_.antipode(mul(gen_elem(x), gen_elem(y), osc()));
                Tensor<K> ss =
                    Tensor<K>::outer({maps_.antipode_gen(x), maps_.antipode_gen(y)});
                Element<K> rhs = as_element(mul_slots(psi().braid(ss), 0, osc()));
                report(r, "antipode-mult", names({x, y}), lhs - rhs);
            }
    }

    void family_coproduct_antipode(AxiomReport& r) {
        for (Gen x : kGens) {
            Tensor<K> lhs = maps_.coproduct(maps_.antipode_gen(x));
            Tensor<K> rhs =
                map_slot(map_slot(psi().braid(maps_.coproduct_gen(x)), 0, s_fn()), 1, s_fn());
            report(r, "coproduct-antipode", names({x}), lhs - rhs);
        }
    }

    void family_counit_mult(AxiomReport& r) {
        for (Gen x : kGens)
            for (Gen y : kGens) {
                K lhs = maps_.counit(mul(gen_elem(x), gen_elem(y), osc()));
                K rhs = maps_.counit_gen(x) * maps_.counit_gen(y);
                report(r, "counit-mult", names({x, y}), K(lhs - rhs));
            }
    }

    void family_yang_baxter(AxiomReport& r) {
        for (Gen x : kGens)
            for (Gen y : kGens)
                for (Gen z : kGens) {
                    Tensor<K> t = base({x, y, z});
                    Tensor<K> lhs =
                        braid_slots(braid_slots(braid_slots(t, 0, psi()), 1, psi()), 0, psi());
                    Tensor<K> rhs =
                        braid_slots(braid_slots(braid_slots(t, 1, psi()), 0, psi()), 1, psi());
                    report(r, "yang-baxter", names({x, y, z}), lhs - rhs);
                }
    }

    void family_unit_conditions(AxiomReport& r) {
        Tensor<K> unit2(2);
        unit2.add({mono_one(), mono_one()}, maps_.one());
        report(r, "unit-coproduct", "1", maps_.coproduct_mono(mono_one()) - unit2);
        report(r, "unit-counit", "1", K(maps_.counit_mono(mono_one()) - maps_.one()));
        report(r, "unit-antipode", "1",
               maps_.antipode_mono(mono_one()) - Element<K>::unit(maps_.one()));
        for (Gen x : kGens) {
            Tensor<K> left(2), right(2);
            left.add({mono_of(x), mono_one()}, maps_.one());
            right.add({mono_one(), mono_of(x)}, maps_.one());
            report(r, "unit-braid-left", names({x}),
                   psi().braid_mono(mono_one(), mono_of(x)) - left);
            report(r, "unit-braid-right", names({x}),
                   psi().braid_mono(mono_of(x), mono_one()) - right);
        }
    }

    void family_relation_compat(AxiomReport& r) {
        auto rels = detail::defining_relations(osc());
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const auto& [lhs, rhs] = rels[i];
            auto dsum = [&](const detail::WordSum<K>& ws) {
                Tensor<K> t(2);
                for (const auto& [c, w] : ws) t += maps_.coproduct_word(w).scaled(c);
                return t;
            };
            auto esum = [&](const detail::WordSum<K>& ws) {
                K v = zero_like(maps_.one());
                for (const auto& [c, w] : ws) v += maps_.counit_word(w) * c;
                return v;
            };
            auto ssum = [&](const detail::WordSum<K>& ws) {
                Element<K> e;
                for (const auto& [c, w] : ws) e += maps_.antipode_word(w).scaled(c);
                return e;
            };
            std::string rn = detail::rel_name(i);
            report(r, "relation-coproduct", rn, dsum(lhs) - dsum(rhs));
            report(r, "relation-counit", rn, K(esum(lhs) - esum(rhs)));
            report(r, "relation-antipode", rn, ssum(lhs) - ssum(rhs));
            for (Gen g : kGens) {
                auto bsum_left = [&](const detail::WordSum<K>& ws) {
                    Tensor<K> t(2);
                    for (const auto& [c, w] : ws)
                        t += psi().braid_words(w, Word{g}).scaled(c);
                    return t;
                };
                auto bsum_right = [&](const detail::WordSum<K>& ws) {
                    Tensor<K> t(2);
                    for (const auto& [c, w] : ws)
                        t += psi().braid_words(Word{g}, w).scaled(c);
                    return t;
                };
                report(r, "relation-braid-left", rn + std::string(";") + gen_name(g),
                       bsum_left(lhs) - bsum_left(rhs));
                report(r, "relation-braid-right", rn + std::string(";") + gen_name(g),
                       bsum_right(lhs) - bsum_right(rhs));
            }
        }
    }

    void family_star(AxiomReport& r) {
        for (Gen x : kGens) {
            Element<K> xs = star(gen_elem(x));
            Tensor<K> lhs = maps_.coproduct(xs);
            Tensor<K> rhs =
                flip(map_slot(map_slot(maps_.coproduct_gen(x), 0, star_fn()), 1, star_fn()));
            report(r, "star-coproduct", names({x}), lhs - rhs);
            report(r, "star-antipode", names({x}),
                   maps_.antipode(xs) - star(maps_.antipode_gen(x)));
        }
    }

    HopfMaps<K> maps_;
    ResidualSink<K>& sink_;
};

namespace detail {

template <class K>
struct ReportSink : ResidualSink<K> {
    AxiomReport report;
    void handle(const std::string& family, const std::string& instance,
                const Tensor<K>& r) override {
        report.checks.push_back({family, instance, r.is_zero(), r.is_zero() ? "" : tensor_str(r)});
    }
    void handle(const std::string& family, const std::string& instance,
                const Element<K>& r) override {
        report.checks.push_back(
            {family, instance, r.is_zero(), r.is_zero() ? "" : element_str(r)});
    }
    void handle(const std::string& family, const std::string& instance, const K& r) override {
        report.checks.push_back(
            {family, instance, braidosc::is_zero(r), braidosc::is_zero(r) ? "" : scalar_str(r)});
    }
};

}  // namespace detail

template <class K>
AxiomReport check_axioms(const Structure<K>& s) {
    detail::ReportSink<K> sink;
    AxiomChecker<K>(s, sink).run();
    return std::move(sink.report);
}

}  // namespace braidosc
