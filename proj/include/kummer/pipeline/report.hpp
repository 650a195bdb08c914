#ifndef KUMMER_PIPELINE_REPORT_HPP
#define KUMMER_PIPELINE_REPORT_HPP

#include <chrono>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include <json.hpp>

#include "kummer/errors.hpp"
#include "kummer/exact/number.hpp"
#include "kummer/exact/poly.hpp"
#include "kummer/kumgeo/quadrics.hpp"
#include "kummer/locsol/everywhere.hpp"
#include "kummer/perm/galois.hpp"

namespace kummer::pipeline {

using Json = nlohmann::ordered_json;
using exact::BigInt;
using exact::Rational;
using exact::UniPolyQ;

inline constexpr const char* kSchemaVersion = "1.0";

enum class CheckOutcome { pass, fail, undecided };

inline std::string to_string(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::pass: return "pass";
        case CheckOutcome::fail: return "fail";
        default: return "undecided";
    }
}

enum class Overall { hypotheses_hold, hypotheses_fail, undecided };

inline std::string to_string(Overall o) {
    switch (o) {
        case Overall::hypotheses_hold: return "hypotheses_hold";
        case Overall::hypotheses_fail: return "hypotheses_fail";
        default: return "undecided";
    }
}

struct Check {
    std::string name;
    CheckOutcome outcome = CheckOutcome::undecided;
    std::string reason;
    Json evidence = Json::object();
    double seconds = 0;
};

struct TheoremReport {
    std::string theorem;  // "A" or "B"
    Json inputs = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> not_run;  // declared checks skipped after a failure
    Overall overall = Overall::undecided;
    std::vector<std::string> assumptions;
    std::vector<std::string> out_of_scope;

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// ---- JSON encoding of exact data -------------------------------------------------------------

inline Json to_json(const Rational& q) { return exact::to_string(q); }
inline Json to_json(const BigInt& n) { return exact::to_string(n); }

/// Coefficients in ascending degree, as exact strings.
inline Json poly_json(const UniPolyQ& f) {
    Json a = Json::array();
    for (int i = 0; i <= f.degree(); ++i) a.push_back(to_json(f[i]));
    return a;
}

inline Json partition_json(const perm::Partition& p) { return Json(p); }

inline Json cycle_types_json(const std::vector<std::pair<std::uint64_t, perm::Partition>>& v) {
    Json a = Json::array();
    for (const auto& [p, t] : v) a.push_back(Json{{"p", p}, {"cycle_type", t}});
    return a;
}

inline Json galois_json(const perm::GaloisVerdict& v) {
    Json j;
    j["classification"] = perm::to_string(v.classification);
    j["method"] = v.method;
    j["discriminant"] = to_json(v.discriminant);
    j["discriminant_is_square"] = v.discriminant_is_square;
    j["witnesses"] = cycle_types_json(v.witnesses);
    j["observed"] = cycle_types_json(v.observed);
    if (v.resolvent) j["resolvent"] = poly_json(*v.resolvent);
    if (v.resolvent_irreducible) j["resolvent_irreducible"] = *v.resolvent_irreducible;
    if (v.resolvent_root) j["resolvent_root"] = to_json(*v.resolvent_root);
    return j;
}

inline Json gram_json(const kumgeo::QuadricForm& q) {
    Json rows = Json::array();
    for (const auto& r : q.gram) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(to_json(c));
        rows.push_back(row);
    }
    return rows;
}

inline Json surface_b_json(const kumgeo::KummerSurfaceB& s) {
    Json j;
    j["coordinates"] = Json(std::vector<std::string>(kumgeo::kCoordNames.begin(), kumgeo::kCoordNames.end()));
    j["norm"] = to_json(s.norm);
    Json qs = Json::array();
    for (const auto& q : s.quadrics) qs.push_back(gram_json(q));
    j["quadrics"] = qs;
    return j;
}

inline Json witness_json(const locsol::Witness& w) {
    Json j;
    j["kind"] = locsol::to_string(w.kind);
    if (!w.coords.empty()) {
        Json c = Json::array();
        for (const auto& x : w.coords) c.push_back(to_json(x));
        j["coords"] = c;
    }
    if (w.kind == locsol::Witness::Kind::padic) {
        j["p"] = w.p;
        j["precision"] = w.precision;
        Json r = Json::array();
        for (const auto& x : w.residues) r.push_back(to_json(x));
        j["residues"] = r;
        j["jacobian_valuation"] = w.jacobian_valuation;
    }
    if (!w.pivots.empty()) j["pivots"] = w.pivots;
    if (w.root_of) j["root_of"] = w.root_of;
    if (!w.boxes.empty()) {
        Json b = Json::array();
        for (const auto& [lo, hi] : w.boxes) b.push_back(Json::array({to_json(lo), to_json(hi)}));
        j["boxes"] = b;
    }
    return j;
}

inline Json verdict_json(const locsol::LocalVerdict& v) {
    Json j;
    j["place"] = v.place.name();
    j["outcome"] = locsol::to_string(v.outcome);
    if (v.heuristic) j["heuristic"] = true;
    j["certificate"] = v.certificate;
    if (v.witness) j["witness"] = witness_json(*v.witness);
    return j;
}

inline Json everywhere_json(const locsol::EverywhereLocal& r) {
    Json j;
    j["overall"] = localarith::to_string(r.overall);
    j["bad_primes"] = r.bad_primes;
    j["good_prime_bound"] = r.good_prime_bound;
    j["undecided_places"] = r.undecided_places;
    if (r.global_point) j["global_point"] = witness_json(*r.global_point);
    if (!r.unfactored.empty()) j["unfactored"] = r.unfactored;
    Json vs = Json::array();
    for (const auto& v : r.verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = vs;
    return j;
}

inline Json effort_json(const locsol::Effort& e) {
    return Json{{"padic_depth", e.padic_depth},         {"real_samples", e.real_samples},
                {"rational_height", e.rational_height}, {"slice_trials", e.slice_trials},
                {"slice_prime_limit", e.slice_prime_limit}, {"enumeration_limit", e.enumeration_limit},
                {"good_prime_bound", e.good_prime_bound}, {"node_budget", e.node_budget},
                {"seed", e.seed}};
}

/// The report as JSON; timings are the only field that varies between identical runs.
inline Json report_json(const TheoremReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["theorem"] = r.theorem;
    j["inputs"] = r.inputs;
    Json cs = Json::array();
    Json times = Json::object();
    for (const auto& c : r.checks) {
        cs.push_back(Json{{"name", c.name}, {"outcome", to_string(c.outcome)}, {"reason", c.reason}, {"evidence", c.evidence}});
        times[c.name] = c.seconds;
    }
    j["checks"] = cs;
    j["not_run"] = r.not_run;
    j["overall"] = to_string(r.overall);
    j["assumptions"] = r.assumptions;
    j["out_of_scope"] = r.out_of_scope;
    j["timings"] = times;
    return j;
}

// ---- running checks --------------------------------------------------------------------------

struct CheckSpec {
    std::string name;
    std::function<Check()> run;
};

namespace detail {

inline Check run_guarded(const CheckSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
        c = spec.run();
    } catch (const ResourceError& e) {
        c.outcome = CheckOutcome::undecided;
        c.reason = e.what();
    } catch (const std::exception& e) {
        c.outcome = CheckOutcome::fail;
        c.reason = e.what();
    }
    c.name = spec.name;
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

}  // namespace detail

/// Fail-fast runs the checks in order and stops at the first failure. keep_going runs every check
/// concurrently and folds the results in declared order.
inline void run_checks(TheoremReport& report, const std::vector<CheckSpec>& specs, bool keep_going) {
    if (keep_going) {
        std::vector<std::future<Check>> fs;
        for (const auto& s : specs) fs.push_back(std::async(std::launch::async, [&s] { return detail::run_guarded(s); }));
        for (auto& f : fs) report.checks.push_back(f.get());
    } else {
        for (std::size_t i = 0; i < specs.size(); ++i) {
            report.checks.push_back(detail::run_guarded(specs[i]));
            if (report.checks.back().outcome == CheckOutcome::fail) {
                for (std::size_t j = i + 1; j < specs.size(); ++j) report.not_run.push_back(specs[j].name);
                break;
            }
        }
    }
    bool any_fail = false, all_pass = report.not_run.empty();
    for (const auto& c : report.checks) {
        if (c.outcome == CheckOutcome::fail) any_fail = true;
        if (c.outcome != CheckOutcome::pass) all_pass = false;
    }
    report.overall = any_fail ? Overall::hypotheses_fail : all_pass ? Overall::hypotheses_hold : Overall::undecided;
}

inline CheckOutcome from_tristate(localarith::Tristate t) {
    switch (t) {
        case localarith::Tristate::yes: return CheckOutcome::pass;
        case localarith::Tristate::no: return CheckOutcome::fail;
        default: return CheckOutcome::undecided;
    }
}

}  // namespace kummer::pipeline

#endif
