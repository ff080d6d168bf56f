// crqos: experiment runner for SFLA-based cognitive-radio link adaptation.
//
// Each subcommand runs one benchmark experiment and writes one CSV; the schema
// is shared across experiments so downstream analysis can concatenate files.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crqos/errors.hpp"
#include "crqos/experiments.hpp"

namespace {

struct CommonFlags {
    std::vector<std::string> modes;
    std::vector<int> subcarriers;
    int population = -1;
    int memeplexes = -1;
    int generations = -1;
    int local_iterations = -1;
    std::vector<std::uint64_t> seeds;
    std::string jump_rule;
    std::string out;
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--mode", flags.modes,
                    "Transmission mode(s): urgence | multimedia | batterie_faible")
        ->delimiter(',');
    cmd->add_option("--n", flags.subcarriers, "Subcarrier count(s)")->delimiter(',');
    cmd->add_option("--pop", flags.population, "Population size F");
    cmd->add_option("--memeplexes", flags.memeplexes, "Memeplex count m");
    cmd->add_option("--generations", flags.generations, "Shuffle-cycle budget");
    cmd->add_option("--local-iterations", flags.local_iterations,
                    "Worst-frog updates per memeplex per cycle");
    cmd->add_option("--seeds,--seed", flags.seeds, "Seed list")->delimiter(',');
    cmd->add_option("--jump-rule", flags.jump_rule, "Jump rule: paper | classic")
        ->check(CLI::IsMember({"paper", "classic"}));
    cmd->add_option("--out", flags.out, "Output CSV path");
    cmd->add_option("--format", flags.format, "Output format (csv)");
}

crqos::ExperimentSpec spec_from_flags(crqos::ExperimentId id, const CommonFlags& flags) {
    crqos::ExperimentSpec spec = crqos::defaults_for(id);
    if (!flags.modes.empty()) {
        spec.modes.clear();
        for (const auto& name : flags.modes) spec.modes.push_back(crqos::mode_from_name(name));
    }
    if (!flags.subcarriers.empty()) spec.subcarriers = flags.subcarriers;
    if (flags.population >= 0) spec.population = flags.population;
    if (flags.memeplexes >= 0) spec.memeplexes = flags.memeplexes;
    if (flags.generations >= 0) spec.generations = flags.generations;
    if (flags.local_iterations >= 0) spec.local_iterations = flags.local_iterations;
    if (!flags.seeds.empty()) spec.seeds = flags.seeds;
    if (!flags.jump_rule.empty())
        spec.jump_rule = flags.jump_rule == "paper" ? crqos::JumpRule::paper_absolute
                                                    : crqos::JumpRule::signed_classic;
    if (!flags.out.empty()) spec.out_path = flags.out;
    if (flags.format != "csv")
        throw crqos::ValidationError("unsupported format '" + flags.format + "' (only csv)");
    return spec;
}

int execute(const crqos::ExperimentSpec& spec) {
    const auto rows = crqos::run_experiment(spec);
    crqos::write_csv(rows, spec.out_path);
    std::cout << spec.out_path << ": " << rows.size() << " rows\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cognitive-radio QoS optimization: SFLA engine, GA baseline, exhaustive oracle"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        crqos::ExperimentId id;
        CommonFlags flags;
        bool allow_n2 = false;
        CLI::App* cmd = nullptr;
    };
    std::vector<Sub> subs = {
        {"convergence", "Per-generation best fitness, all modes (F=100, n=8, 2000 generations)",
         crqos::ExperimentId::convergence, {}, false, nullptr},
        {"sweep-n", "Final fitness vs subcarrier count", crqos::ExperimentId::subcarrier_sweep,
         {}, false, nullptr},
        {"sweep-m", "Final fitness over the memeplex/generation grid",
         crqos::ExperimentId::memeplex_sweep, {}, false, nullptr},
        {"timing", "Wall-clock per full run vs subcarrier count", crqos::ExperimentId::timing,
         {}, false, nullptr},
        {"versus-ga", "Matched-budget SFLA vs GA comparison", crqos::ExperimentId::sfla_vs_ga,
         {}, false, nullptr},
        {"oracle", "Exhaustive small-instance oracle vs SFLA", crqos::ExperimentId::oracle_check,
         {}, false, nullptr},
    };
    for (auto& sub : subs) {
        sub.cmd = app.add_subcommand(sub.name, sub.help);
        add_common_flags(sub.cmd, sub.flags);
        if (sub.id == crqos::ExperimentId::oracle_check)
            sub.cmd->add_flag("--allow-n2", sub.allow_n2,
                              "Permit the ~1.07M-point n=2 oracle scan");
    }

    std::string config_path;
    CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment described by a config file");
    run_cmd->add_option("config", config_path, "Flat key = value config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (run_cmd->parsed()) return execute(crqos::parse_config_file(config_path));
        for (auto& sub : subs) {
            if (!sub.cmd->parsed()) continue;
            crqos::ExperimentSpec spec = spec_from_flags(sub.id, sub.flags);
            spec.allow_n2_oracle = sub.allow_n2;
            return execute(spec);
        }
        std::cerr << "error: no subcommand given\n";
        return 1;
    } catch (const crqos::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const crqos::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
