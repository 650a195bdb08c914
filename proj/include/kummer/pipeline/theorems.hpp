#ifndef KUMMER_PIPELINE_THEOREMS_HPP
#define KUMMER_PIPELINE_THEOREMS_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "kummer/exact/irreducible.hpp"
#include "kummer/kumgeo/quadrics.hpp"
#include "kummer/kumgeo/resolvent.hpp"
#include "kummer/kumgeo/surface_a.hpp"
#include "kummer/localarith/lambda.hpp"
#include "kummer/localarith/reduction.hpp"
#include "kummer/locsol/everywhere.hpp"
#include "kummer/modf2/cohomology.hpp"
#include "kummer/modf2/module.hpp"
#include "kummer/perm/galois.hpp"
#include "kummer/perm/group.hpp"
#include "kummer/pipeline/report.hpp"

namespace kummer::pipeline {

using localarith::LambdaElement;

struct PipelineOptions {
    locsol::Effort effort;
    std::string effort_name = "default";
    bool keep_going = false;
    bool run_local = true;
    std::uint64_t prime_budget = 10000;  // Galois witnesses and the lambda class search
};

/// Conditions (a)-(d) for the zero-sum module of S_m, plus H^1 of the permutation module.
struct ZeroSumConditions {
    int m = 0;
    bool simple = false;
    int endomorphism_dim = 0;
    int h1 = -1;
    int coinvariants_near_long_cycle = -1;  // (m-1)-cycle
    int coinvariants_long_cycle = -1;       // m-cycle
    int h1_permutation_module = -1;

    bool holds() const {
        return simple && endomorphism_dim == 1 && h1 == 0 && coinvariants_near_long_cycle == 1 && coinvariants_long_cycle == 0;
    }
};

inline ZeroSumConditions compute_zero_sum_conditions(int m) {
    auto g = modf2::share(perm::symmetric_group(m));
    auto zs = modf2::zero_sum_module(g);
    ZeroSumConditions c;
    c.m = m;
    c.simple = modf2::is_simple(zs);
    c.endomorphism_dim = modf2::endomorphism_dim(zs);
    c.h1 = modf2::h1_dim(zs);
    c.coinvariants_near_long_cycle = modf2::coinvariant_dim(zs, perm::near_long_cycle(m));
    c.coinvariants_long_cycle = modf2::coinvariant_dim(zs, perm::long_cycle(m));
    c.h1_permutation_module = modf2::h1_dim(modf2::permutation_module(g));
    return c;
}

/// Computed once per m.
inline const ZeroSumConditions& zero_sum_conditions(int m) {
    static std::mutex mu;
    static std::map<int, ZeroSumConditions> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, compute_zero_sum_conditions(m)).first;
    return it->second;
}

inline Json zero_sum_json(const ZeroSumConditions& c) {
    return Json{{"m", c.m},
                {"a_simple", c.simple},
                {"a_endomorphism_dim", c.endomorphism_dim},
                {"b_h1_dim", c.h1},
                {"c_coinvariants_of_m_minus_1_cycle", c.coinvariants_near_long_cycle},
                {"d_coinvariants_of_m_cycle", c.coinvariants_long_cycle},
                {"h1_dim_permutation_module", c.h1_permutation_module}};
}

namespace detail {

inline void require_odd_prime_input(std::uint64_t w, const std::string& name) {
    if (w < 3 || !exact::is_prime_u64(w)) throw InputError(name + " = " + std::to_string(w) + " is not an odd prime");
}

/// Everything needed to replay the run; the knobs follow the preset name so they override it.
inline void echo_options(Json& inputs, const PipelineOptions& opt) {
    inputs["effort"] = opt.effort_name;
    const Json knobs = effort_json(opt.effort);
    for (const auto& [k, v] : knobs.items()) inputs[k] = v;
    inputs["prime_budget"] = opt.prime_budget;
    inputs["local"] = opt.run_local;
}

inline Check irreducibility_check(const UniPolyQ& f) {
    Check c;
    auto r = exact::irreducibility_over_q(f);
    c.evidence["method"] = r.method;
    if (r.factor) c.evidence["factor"] = poly_json(*r.factor);
    Json pats = Json::array();
    for (const auto& [p, d] : r.patterns) pats.push_back(Json{{"p", p}, {"degrees", d}});
    c.evidence["patterns"] = pats;
    c.outcome = !r.decided ? CheckOutcome::undecided : r.irreducible ? CheckOutcome::pass : CheckOutcome::fail;
    if (c.outcome == CheckOutcome::fail) c.reason = "reducible over Q";
    return c;
}

inline Check galois_check(const perm::GaloisVerdict& v, const std::string& group) {
    Check c;
    c.evidence = galois_json(v);
    if (v.classification == perm::GaloisClass::symmetric) {
        c.outcome = CheckOutcome::pass;
    } else if (v.classification == perm::GaloisClass::undecided) {
        c.outcome = CheckOutcome::undecided;
        c.reason = v.method;
    } else {
        c.outcome = CheckOutcome::fail;
        c.reason = "Galois group is not " + group + " (" + v.method + ")";
    }
    return c;
}

inline Check zero_sum_check(int m) {
    Check c;
    const auto& z = zero_sum_conditions(m);
    c.evidence = zero_sum_json(z);
    c.outcome = z.holds() ? CheckOutcome::pass : CheckOutcome::fail;
    if (!z.holds()) c.reason = "a condition among (a)-(d) fails for the zero-sum module";
    return c;
}

inline Check local_check(const locsol::EverywhereLocal& r) {
    Check c;
    c.evidence = everywhere_json(r);
    c.outcome = from_tristate(r.overall);
    if (r.overall == localarith::Tristate::no) {
        for (const auto& v : r.verdicts)
            if (v.outcome == locsol::Outcome::insoluble) {
                c.reason = "insoluble at " + v.place.name() + ": " + v.certificate;
                break;
            }
    } else if (r.overall == localarith::Tristate::undecided) {
        c.reason = "undecided at";
        for (const auto& p : r.undecided_places) c.reason += " [" + p + "]";
    }
    return c;
}

}  // namespace detail

inline const std::string kShaAssumption =
    "Sha(A^F){2} is finite for every quadratic twist of each Jacobian (assumed, not checkable)";

/// Hypotheses of Theorem A for the surface z^2 = g1(x) g2(y) and odd primes w1, w2.
inline TheoremReport check_theorem_a(const UniPolyQ& g1, const UniPolyQ& g2, std::uint64_t w1, std::uint64_t w2,
                                     const PipelineOptions& opt = {}) {
    if (g1.degree() != 4) throw InputError("g1 must have degree 4, got " + std::to_string(g1.degree()));
    if (g2.degree() != 4) throw InputError("g2 must have degree 4, got " + std::to_string(g2.degree()));
    detail::require_odd_prime_input(w1, "w1");
    detail::require_odd_prime_input(w2, "w2");
    if (w1 == w2) throw InputError("w1 and w2 must be distinct");

    TheoremReport rep;
    rep.theorem = "A";
    rep.inputs = Json{{"g1", poly_json(g1)}, {"g2", poly_json(g2)}, {"w1", w1}, {"w2", w2}};
    detail::echo_options(rep.inputs, opt);
    rep.assumptions = {kShaAssumption};
    rep.out_of_scope = {"Selmer-group reduction of the core proposition", "existence of the quadratic twist"};

    const std::vector<UniPolyQ> gs{g1, g2};
    const std::vector<std::uint64_t> ws{w1, w2};
    std::vector<CheckSpec> specs;
    specs.push_back({"irreducible_g1", [g1] { return detail::irreducibility_check(g1); }});
    specs.push_back({"irreducible_g2", [g2] { return detail::irreducibility_check(g2); }});
    specs.push_back({"galois_S4_g1", [g1] { return detail::galois_check(perm::galois_group_quartic(g1), "S4"); }});
    specs.push_back({"galois_S4_g2", [g2] { return detail::galois_check(perm::galois_group_quartic(g2), "S4"); }});
    specs.push_back({"integral_at_w", [gs, ws] {
                         Check c;
                         c.outcome = CheckOutcome::pass;
                         Json rows = Json::array();
                         for (std::size_t i = 0; i < 2; ++i)
                             for (auto w : ws) {
                                 bool ok = gs[i].all_p_integral(BigInt(w));
                                 rows.push_back(Json{{"g", i + 1}, {"w", w}, {"integral", ok}});
                                 if (!ok) {
                                     c.outcome = CheckOutcome::fail;
                                     c.reason = "g" + std::to_string(i + 1) + " is not integral at " + std::to_string(w);
                                 }
                             }
                         c.evidence["integrality"] = rows;
                         return c;
                     }});
    specs.push_back({"discriminant_valuations", [gs, ws] {
                         Check c;
                         auto cf = localarith::check_condition_f(gs, ws);
                         c.evidence["valuations"] = cf.valuations;
                         c.evidence["discriminants"] = Json::array({to_json(exact::discriminant(gs[0])), to_json(exact::discriminant(gs[1]))});
                         c.outcome = cf.holds ? CheckOutcome::pass : CheckOutcome::fail;
                         if (!cf.holds) c.reason = "val_{w_j}(disc g_i) is not the identity matrix";
                         return c;
                     }});
    specs.push_back({"torsors_unramified", [gs, ws] {
                         Check c;
                         c.outcome = CheckOutcome::pass;
                         Json rows = Json::array();
                         for (std::size_t i = 0; i < 2; ++i)
                             for (auto w : ws) {
                                 auto t = localarith::quartic_torsor_unramified(gs[i], w);
                                 Json pat = Json::array();
                                 for (const auto& [d, e] : t.pattern) pat.push_back(Json::array({d, e}));
                                 rows.push_back(Json{{"g", i + 1}, {"w", w}, {"unramified", localarith::to_string(t.unramified)},
                                                     {"disc_valuation", t.disc_valuation}, {"reason", t.reason}, {"pattern", pat}});
                                 auto o = from_tristate(t.unramified);
                                 if (o == CheckOutcome::fail) {
                                     c.outcome = o;
                                     c.reason = "torsor of g" + std::to_string(i + 1) + " ramified at " + std::to_string(w);
                                 } else if (o == CheckOutcome::undecided && c.outcome == CheckOutcome::pass) {
                                     c.outcome = o;
                                     c.reason = t.reason;
                                 }
                             }
                         c.evidence["torsors"] = rows;
                         return c;
                     }});
    specs.push_back({"conditions_a_to_d", [] { return detail::zero_sum_check(3); }});
    specs.push_back({"conditions_e_g", [gs, ws] {
                         // the resolvent cubics have discriminant 3^12 disc(g_i): same parity at every w
                         Check c;
                         c.outcome = CheckOutcome::pass;
                         Json rows = Json::array();
                         for (std::size_t i = 0; i < 2; ++i) {
                             auto cubic = kumgeo::resolvent_cubic(gs[i]).cubic;
                             int vg = exact::valuation(exact::discriminant(gs[i]), BigInt(ws[i]));
                             int vc = exact::valuation(exact::discriminant(cubic), BigInt(ws[i]));
                             rows.push_back(Json{{"i", i + 1}, {"w", ws[i]}, {"val_disc_quartic", vg}, {"val_disc_resolvent_cubic", vc},
                                                 {"sqrt_disc_ramified", vg % 2 == 1}});
                             if (vg % 2 != 1) {
                                 c.outcome = CheckOutcome::fail;
                                 c.reason = "k(sqrt(disc g" + std::to_string(i + 1) + ")) is unramified at its own prime";
                             }
                         }
                         c.evidence["ramification"] = rows;
                         return c;
                     }});
    if (opt.run_local) {
        const auto effort = opt.effort;
        specs.push_back({"everywhere_locally_soluble", [g1, g2, effort] {
                             return detail::local_check(locsol::everywhere_local(kumgeo::theorem_a_surface(g1, g2), effort));
                         }});
    }
    run_checks(rep, specs, opt.keep_going);
    return rep;
}

/// Hypotheses of Theorem B for y^2 = f(x), lambda in L = Q[x]/(f) and an odd prime w.
inline TheoremReport check_theorem_b(const UniPolyQ& f, const LambdaElement& lambda, std::uint64_t w,
                                     const PipelineOptions& opt = {}) {
    if (f.degree() != 5) throw InputError("f must have degree 5, got " + std::to_string(f.degree()));
    detail::require_odd_prime_input(w, "w");
    const UniPolyQ lam = lambda.reduced(f);

    TheoremReport rep;
    rep.theorem = "B";
    rep.inputs = Json{{"f", poly_json(f)}, {"lambda", poly_json(lam)}, {"w", w}};
    detail::echo_options(rep.inputs, opt);
    rep.assumptions = {kShaAssumption};
    rep.out_of_scope = {"Selmer-group reduction of the core proposition", "existence of the quadratic twist"};

    const std::uint64_t budget = opt.prime_budget;
    std::vector<CheckSpec> specs;
    specs.push_back({"irreducible", [f] {
                         Check c = detail::irreducibility_check(f);
                         if (!f.is_monic()) {
                             c.outcome = CheckOutcome::fail;
                             c.reason = "f is not monic";
                         }
                         return c;
                     }});
    specs.push_back({"galois_S5", [f, budget] {
                         Check c = detail::galois_check(perm::galois_group_quintic(f, budget), "S5");
                         // inertia at a node prime is a transposition, and Aff_5 has none
                         if (c.outcome == CheckOutcome::pass) c.evidence["aff5_exclusion"] = "cycle type (2,1,1,1) or (3,2) at an unramified prime";
                         return c;
                     }});
    specs.push_back({"node_reduction_at_w", [f, w] {
                         Check c;
                         auto r = localarith::reduction_type(f, w);
                         c.evidence["disc_valuation"] = r.disc_valuation;
                         c.evidence["kind"] = localarith::to_string(r.kind);
                         if (r.double_root) c.evidence["double_root"] = *r.double_root;
                         Json pat = Json::array();
                         for (const auto& [d, e] : r.pattern) pat.push_back(Json::array({d, e}));
                         c.evidence["pattern"] = pat;
                         c.evidence["discriminant"] = to_json(exact::discriminant(f));
                         c.outcome = r.kind == localarith::ReductionKind::node ? CheckOutcome::pass : CheckOutcome::fail;
                         if (c.outcome == CheckOutcome::fail) c.reason = "val_w(disc f) = " + std::to_string(r.disc_valuation) + ", not 1";
                         return c;
                     }});
    specs.push_back({"lambda_parity", [f, lam, w] {
                         Check c;
                         auto r = localarith::lambda_parity_condition(f, LambdaElement{lam}, w);
                         Json comps = Json::array();
                         for (const auto& x : r.completions)
                             comps.push_back(Json{{"residue_degree", x.residue_degree}, {"ramification", x.ramification}, {"valuation", x.valuation}});
                         c.evidence["completions"] = comps;
                         c.evidence["precision"] = r.precision;
                         c.outcome = from_tristate(r.outcome);
                         if (c.outcome == CheckOutcome::fail) c.reason = "no r in Q* makes every v_P(lambda r) even";
                         if (c.outcome == CheckOutcome::undecided) c.reason = "valuations not determined within the precision ladder";
                         return c;
                     }});
    specs.push_back({"lambda_nontrivial", [f, lam, budget] {
                         Check c;
                         if (lam.degree() <= 0) {
                             c.outcome = CheckOutcome::fail;
                             c.reason = "lambda lies in Q*, so its class is trivial; the surface contains the line u = r + s theta, u0 = s";
                             c.evidence["lambda_in_Q"] = true;
                             return c;
                         }
                         auto r = localarith::lambda_nontrivial_class(f, LambdaElement{lam}, budget);
                         c.evidence["verdict"] = localarith::to_string(r.verdict);
                         c.evidence["primes_used"] = r.primes_used;
                         if (r.witness) {
                             c.evidence["witness"] = *r.witness;
                             c.evidence["residue_degrees"] = r.degrees;
                             c.evidence["characters"] = r.characters;
                         }
                         c.outcome = r.verdict == localarith::ClassVerdict::certified_nontrivial ? CheckOutcome::pass : CheckOutcome::undecided;
                         if (c.outcome == CheckOutcome::undecided)
                             c.reason = "no prime up to " + std::to_string(budget) + " certifies lambda outside Q* L*^2";
                         return c;
                     }});
    specs.push_back({"conditions_a_to_d", [] { return detail::zero_sum_check(5); }});
    if (opt.run_local) {
        const auto effort = opt.effort;
        specs.push_back({"everywhere_locally_soluble", [f, lam, effort] {
                             auto s = kumgeo::kummer_quadrics(f, LambdaElement{lam});
                             Check c = detail::local_check(locsol::everywhere_local(s, effort));
                             c.evidence["surface"] = surface_b_json(s);
                             return c;
                         }});
    }
    run_checks(rep, specs, opt.keep_going);
    return rep;
}

}  // namespace kummer::pipeline

#endif
