#ifndef KUMMER_CLI_COMMANDS_HPP
#define KUMMER_CLI_COMMANDS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kummer/cli/config.hpp"
#include "kummer/perm/galois.hpp"
#include "kummer/pipeline/admissible.hpp"
#include "kummer/pipeline/theorems.hpp"

namespace kummer::cli {

using pipeline::Json;

/// Exit codes shared by every subcommand.
enum ExitCode : int { kHold = 0, kFail = 1, kUndecided = 2, kInputError = 3 };

struct Flags {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> effort;
    bool keep_going = false;
};

struct CommandResult {
    int exit_code = kHold;
    Json output;
    std::vector<std::string> summary;   // stderr lines
    std::vector<std::string> warnings;
};

inline const std::vector<std::string> kEffortKeys{"padic_depth",       "real_samples",      "rational_height",
                                                  "slice_trials",      "slice_prime_limit", "enumeration_limit",
                                                  "good_prime_bound",  "node_budget"};

inline std::set<std::string> allowed_keys(std::initializer_list<std::string> own) {
    std::set<std::string> s(own);
    for (const auto& k : kEffortKeys) s.insert(k);
    for (const char* k : {"effort", "seed", "prime_budget", "local"}) s.insert(k);
    return s;
}

/// Preset from --effort, else the config, else default; config knobs apply unless --effort was given.
inline pipeline::PipelineOptions options_from(const Config& cfg, const Flags& flags, CommandResult& res) {
    pipeline::PipelineOptions o;
    o.effort_name = flags.effort ? *flags.effort : cfg.has("effort") ? cfg.scalar("effort") : "default";
    o.effort = locsol::Effort::named(o.effort_name);
    bool knobs = false;
    for (const auto& k : kEffortKeys) knobs = knobs || cfg.has(k);
    if (knobs && flags.effort) {
        res.warnings.push_back("--effort given: effort knobs in the config are ignored");
    } else {
        auto& e = o.effort;
        e.padic_depth = static_cast<int>(cfg.uint_or("padic_depth", static_cast<std::uint64_t>(e.padic_depth)));
        e.real_samples = static_cast<int>(cfg.uint_or("real_samples", static_cast<std::uint64_t>(e.real_samples)));
        e.rational_height = static_cast<int>(cfg.uint_or("rational_height", static_cast<std::uint64_t>(e.rational_height)));
        e.slice_trials = static_cast<int>(cfg.uint_or("slice_trials", static_cast<std::uint64_t>(e.slice_trials)));
        e.slice_prime_limit = cfg.uint_or("slice_prime_limit", e.slice_prime_limit);
        e.enumeration_limit = cfg.uint_or("enumeration_limit", e.enumeration_limit);
        e.good_prime_bound = cfg.uint_or("good_prime_bound", e.good_prime_bound);
        e.node_budget = cfg.uint_or("node_budget", e.node_budget);
        if (e.padic_depth < 1 || e.padic_depth > 200) throw InputError("padic_depth must lie in 1..200");
        if (e.rational_height > 1000) throw InputError("rational_height must be at most 1000");
    }
    o.effort.seed = flags.seed ? *flags.seed : cfg.uint_or("seed", o.effort.seed);
    o.prime_budget = cfg.uint_or("prime_budget", o.prime_budget);
    o.run_local = cfg.has("local") ? cfg.boolean("local") : true;
    o.keep_going = flags.keep_going;
    return o;
}

inline int exit_code(pipeline::Overall o) {
    switch (o) {
        case pipeline::Overall::hypotheses_hold: return kHold;
        case pipeline::Overall::hypotheses_fail: return kFail;
        default: return kUndecided;
    }
}

inline int exit_code(localarith::Tristate t) {
    switch (t) {
        case localarith::Tristate::yes: return kHold;
        case localarith::Tristate::no: return kFail;
        default: return kUndecided;
    }
}

inline void summarize(const pipeline::TheoremReport& r, CommandResult& res) {
    res.summary.push_back("Theorem " + r.theorem + " hypotheses:");
    for (const auto& c : r.checks)
        res.summary.push_back("  " + c.name + ": " + pipeline::to_string(c.outcome) + (c.reason.empty() ? "" : " (" + c.reason + ")"));
    for (const auto& n : r.not_run) res.summary.push_back("  " + n + ": not run");
    for (const auto& a : r.assumptions) res.summary.push_back("  assumption: " + a);
    res.summary.push_back("overall: " + pipeline::to_string(r.overall));
}

inline std::uint64_t prime_key(const Config& cfg, const std::string& key) {
    std::uint64_t w = cfg.uint(key);
    if (w < 3 || !exact::is_prime_u64(w)) throw InputError(key + " = " + std::to_string(w) + " is not an odd prime");
    return w;
}

inline CommandResult cmd_check_a(const Config& cfg, const Flags& flags) {
    cfg.require_known(allowed_keys({"g1", "g2", "w1", "w2"}));
    CommandResult res;
    auto opt = options_from(cfg, flags, res);
    auto rep = pipeline::check_theorem_a(cfg.poly("g1"), cfg.poly("g2"), prime_key(cfg, "w1"), prime_key(cfg, "w2"), opt);
    res.output = pipeline::report_json(rep);
    res.exit_code = exit_code(rep.overall);
    summarize(rep, res);
    return res;
}

inline localarith::LambdaElement lambda_from(const Config& cfg, CommandResult& res) {
    if (cfg.has("lambda")) return localarith::LambdaElement{cfg.poly("lambda")};
    res.warnings.push_back("lambda not given: using lambda = 1, whose surface contains a rational line");
    return localarith::LambdaElement::one();
}

inline CommandResult cmd_check_b(const Config& cfg, const Flags& flags) {
    cfg.require_known(allowed_keys({"f", "lambda", "w"}));
    CommandResult res;
    auto opt = options_from(cfg, flags, res);
    auto lam = lambda_from(cfg, res);
    auto rep = pipeline::check_theorem_b(cfg.poly("f"), lam, prime_key(cfg, "w"), opt);
    res.output = pipeline::report_json(rep);
    res.exit_code = exit_code(rep.overall);
    summarize(rep, res);
    return res;
}

inline Json tool_envelope(const std::string& tool, Json inputs, Json result) {
    return Json{{"schema_version", pipeline::kSchemaVersion}, {"tool", tool}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

inline CommandResult cmd_galois(const Config& cfg, const Flags&) {
    cfg.require_known({"f", "prime_budget"});
    CommandResult res;
    UniPolyQ f = cfg.poly("f");
    std::uint64_t budget = cfg.uint_or("prime_budget", 10000);
    perm::GaloisVerdict v;
    switch (f.degree()) {
        case 3: v = perm::galois_group_cubic(f); break;
        case 4: v = perm::galois_group_quartic(f); break;
        case 5: v = perm::galois_group_quintic(f, budget); break;
        default: throw InputError("galois handles degrees 3, 4 and 5");
    }
    res.output = tool_envelope("galois", Json{{"f", pipeline::poly_json(f)}, {"prime_budget", budget}}, pipeline::galois_json(v));
    res.summary.push_back("Gal(" + f.to_string() + "): " + perm::to_string(v.classification) + " (" + v.method + ")");
    res.exit_code = v.classification == perm::GaloisClass::undecided ? kUndecided : kHold;
    return res;
}

inline CommandResult cmd_cohomology(const Config& cfg, const Flags&) {
    cfg.require_known({"m"});
    CommandResult res;
    std::uint64_t m = cfg.uint("m");
    if (m < 3 || m > 7) throw InputError("m must lie in 3..7");
    const auto& z = pipeline::zero_sum_conditions(static_cast<int>(m));
    Json r = pipeline::zero_sum_json(z);
    r["conditions_hold"] = z.holds();
    res.output = tool_envelope("cohomology", Json{{"m", m}}, r);
    res.summary.push_back("zero-sum module of S_" + std::to_string(m) + ": (a)-(d) " + (z.holds() ? "hold" : "fail"));
    res.exit_code = z.holds() ? kHold : kFail;
    return res;
}

inline CommandResult cmd_kummer_eqs(const Config& cfg, const Flags&) {
    cfg.require_known({"f", "lambda"});
    CommandResult res;
    auto lam = lambda_from(cfg, res);
    UniPolyQ f = cfg.poly("f");
    auto s = kumgeo::kummer_quadrics(f, lam);
    res.output = tool_envelope("kummer-eqs", Json{{"f", pipeline::poly_json(f)}, {"lambda", pipeline::poly_json(s.lambda.a)}},
                               pipeline::surface_b_json(s));
    res.summary.push_back("three quadrics in P^5, N(lambda) = " + exact::to_string(s.norm));
    return res;
}

/// Surface A from g1, g2 or surface B from f, lambda; one place when `place` is given.
inline CommandResult cmd_locsol(const Config& cfg, const Flags& flags) {
    cfg.require_known(allowed_keys({"g1", "g2", "f", "lambda", "place"}));
    CommandResult res;
    auto opt = options_from(cfg, flags, res);
    const bool is_a = cfg.has("g1") || cfg.has("g2");
    if (is_a == cfg.has("f")) throw InputError("give either g1, g2 (surface A) or f, lambda (surface B)");
    Json inputs;
    std::optional<kumgeo::KummerSurfaceA> sa;
    std::optional<kumgeo::KummerSurfaceB> sb;
    if (is_a) {
        if (cfg.has("lambda")) throw InputError("lambda belongs to surface B");
        sa = kumgeo::theorem_a_surface(cfg.poly("g1"), cfg.poly("g2"));
        inputs = Json{{"g1", pipeline::poly_json(sa->g1)}, {"g2", pipeline::poly_json(sa->g2)}};
    } else {
        sb = kumgeo::kummer_quadrics(cfg.poly("f"), lambda_from(cfg, res));
        inputs = Json{{"f", pipeline::poly_json(sb->f)}, {"lambda", pipeline::poly_json(sb->lambda.a)}};
    }
    const Json knobs = pipeline::effort_json(opt.effort);
    for (const auto& [k, v] : knobs.items()) inputs[k] = v;
    if (!cfg.has("place")) {
        auto r = is_a ? locsol::everywhere_local(*sa, opt.effort) : locsol::everywhere_local(*sb, opt.effort);
        res.output = tool_envelope("locsol", inputs, pipeline::everywhere_json(r));
        res.summary.push_back("everywhere locally soluble: " + localarith::to_string(r.overall));
        res.exit_code = exit_code(r.overall);
        return res;
    }
    std::string place = cfg.scalar("place");
    inputs["place"] = place;
    locsol::LocalVerdict v;
    if (place == "inf") {
        v = is_a ? locsol::real_solubility_A(*sa) : locsol::real_solubility_B(*sb, opt.effort.real_samples, opt.effort.seed);
    } else {
        std::uint64_t p = cfg.uint("place");
        if (p < 3 || !exact::is_prime_u64(p)) throw InputError("place must be inf or an odd prime");
        v = is_a ? locsol::padic_solubility_A(*sa, p, opt.effort) : locsol::padic_solubility_B(*sb, p, opt.effort);
    }
    res.output = tool_envelope("locsol", inputs, pipeline::verdict_json(v));
    res.summary.push_back(v.place.name() + ": " + locsol::to_string(v.outcome) + " (" + v.certificate + ")");
    res.exit_code = v.outcome == locsol::Outcome::soluble ? kHold : v.outcome == locsol::Outcome::insoluble ? kFail : kUndecided;
    return res;
}

/// Polynomials f1, f2, ... (or f) with cycle types target1, target2, ... (or target).
inline CommandResult cmd_find_prime(const Config& cfg, const Flags&) {
    std::set<std::string> allowed{"f", "target", "S", "bound"};
    for (int i = 1; i <= 9; ++i) {
        allowed.insert("f" + std::to_string(i));
        allowed.insert("target" + std::to_string(i));
    }
    cfg.require_known(allowed);
    CommandResult res;
    pipeline::AdmissiblePrimeQuery q;
    std::vector<UniPolyQ> polys;
    auto read_target = [&cfg](const std::string& key) {
        perm::Partition t;
        for (auto k : cfg.uint_list(key)) t.push_back(static_cast<int>(k));
        return t;
    };
    if (cfg.has("f")) {
        if (cfg.has("f1")) throw InputError("use either f or f1, f2, ...");
        polys.push_back(cfg.poly("f"));
        q.targets.push_back(read_target("target"));
    } else {
        for (int i = 1; i <= 9 && cfg.has("f" + std::to_string(i)); ++i) {
            polys.push_back(cfg.poly("f" + std::to_string(i)));
            q.targets.push_back(read_target("target" + std::to_string(i)));
        }
        if (polys.empty()) throw InputError("missing key 'f'");
    }
    if (cfg.has("S")) q.S = cfg.uint_list("S");
    q.bound = cfg.uint_or("bound", q.bound);
    auto r = pipeline::find_admissible_prime(q, polys);
    res.output = pipeline::admissible_json(q, polys, r);
    res.output["tool"] = "find-prime";
    res.warnings = r.warnings;
    res.summary.push_back(r.q ? "admissible prime q = " + std::to_string(*r.q) : "no admissible prime up to " + std::to_string(q.bound));
    res.summary.push_back("note: " + pipeline::kSelmerConditionNote);
    res.exit_code = r.q ? kHold : kUndecided;
    return res;
}

}  // namespace kummer::cli

#endif
