#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "kummer/cli/commands.hpp"

using namespace kummer;
using namespace kummer::cli;

namespace {

struct Leaf {
    std::string config_path;
    std::function<CommandResult(const Config&, const Flags&)> run;
};

int emit(const CommandResult& res, const std::string& out_path) {
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& s : res.summary) std::cerr << s << "\n";
    const std::string text = res.output.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kInputError;
        }
        out << text;
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypothesis checks for Kummer-surface Hasse principle theorems"};
    app.require_subcommand(1);

    std::string out_path;
    Flags flags;
    std::uint64_t seed = 0;
    std::string effort;
    Leaf* chosen = nullptr;
    std::vector<std::unique_ptr<Leaf>> leaves;
    std::vector<CLI::Option*> seed_options;

    auto add_leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                        std::function<CommandResult(const Config&, const Flags&)> run) {
        auto leaf = std::make_unique<Leaf>();
        leaf->run = std::move(run);
        auto* sub = parent->add_subcommand(name, help);
        sub->add_option("config", leaf->config_path, "config file (key = value or JSON); - reads stdin")->required();
        sub->add_option("--out,-o", out_path, "write the JSON report here instead of stdout");
        seed_options.push_back(sub->add_option("--seed", seed, "RNG seed"));
        sub->add_option("--effort", effort, "effort preset")->check(CLI::IsMember({"low", "default", "high"}));
        sub->add_flag("--keep-going", flags.keep_going, "run every check even after a failure");
        Leaf* raw = leaf.get();
        sub->callback([&chosen, raw] { chosen = raw; });
        leaves.push_back(std::move(leaf));
    };

    add_leaf(&app, "check-a", "check the hypotheses of Theorem A (g1, g2, w1, w2)", cmd_check_a);
    add_leaf(&app, "check-b", "check the hypotheses of Theorem B (f, lambda, w)", cmd_check_b);
    auto* tools = app.add_subcommand("tools", "run a single module operation");
    tools->require_subcommand(1);
    add_leaf(tools, "galois", "Galois group of a cubic, quartic or quintic (f)", cmd_galois);
    add_leaf(tools, "cohomology", "conditions (a)-(d) for the zero-sum module of S_m (m)", cmd_cohomology);
    add_leaf(tools, "kummer-eqs", "the three quadrics of surface B (f, lambda)", cmd_kummer_eqs);
    add_leaf(tools, "locsol", "local solubility of surface A (g1, g2) or B (f, lambda)", cmd_locsol);
    add_leaf(tools, "find-prime", "admissible prime search (f or f1.., target or target1.., S, bound)", cmd_find_prime);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    if (!chosen) return kInputError;
    if (!effort.empty()) flags.effort = effort;
    for (auto* o : seed_options)
        if (o->count() > 0) flags.seed = seed;

    try {
        Config cfg = load_config(chosen->config_path);
        return emit(chosen->run(cfg, flags), out_path);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
