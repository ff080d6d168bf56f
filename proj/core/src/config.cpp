#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "crqos/errors.hpp"
#include "crqos/experiments.hpp"

namespace crqos {

namespace {

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t\r");
    if (from == std::string::npos) return "";
    const auto to = s.find_last_not_of(" \t\r");
    return s.substr(from, to - from + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long long parse_int(const std::string& value, const char* key, int line) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected an integer for '") + key + "', got '" + value + "'",
                         line);
    }
}

JumpRule jump_rule_from_token(const std::string& token) {
    if (token == "paper") return JumpRule::paper_absolute;
    if (token == "classic") return JumpRule::signed_classic;
    throw ValidationError("unknown jump rule '" + token + "' (expected paper | classic)");
}

const char* jump_rule_token(JumpRule rule) {
    return rule == JumpRule::paper_absolute ? "paper" : "classic";
}

std::vector<std::uint64_t> seed_range(std::uint64_t from, std::uint64_t to) {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = from; s <= to; ++s) seeds.push_back(s);
    return seeds;
}

const std::vector<TransmissionMode> kAllModes = {
    TransmissionMode::urgence, TransmissionMode::multimedia, TransmissionMode::batterie_faible};

}  // namespace

const char* experiment_name(ExperimentId id) {
    switch (id) {
        case ExperimentId::convergence: return "convergence";
        case ExperimentId::subcarrier_sweep: return "subcarrier_sweep";
        case ExperimentId::memeplex_sweep: return "memeplex_sweep";
        case ExperimentId::timing: return "timing";
        case ExperimentId::sfla_vs_ga: return "sfla_vs_ga";
        case ExperimentId::oracle_check: return "oracle_check";
    }
    return "?";
}

ExperimentId experiment_from_name(const std::string& name) {
    for (ExperimentId id : {ExperimentId::convergence, ExperimentId::subcarrier_sweep,
                            ExperimentId::memeplex_sweep, ExperimentId::timing,
                            ExperimentId::sfla_vs_ga, ExperimentId::oracle_check})
        if (name == experiment_name(id)) return id;
    throw ValidationError("unknown experiment '" + name + "'");
}

ExperimentSpec defaults_for(ExperimentId id) {
    ExperimentSpec spec;
    spec.experiment = id;
    spec.modes = kAllModes;
    spec.local_iterations = 10;
    spec.jump_rule = JumpRule::signed_classic;
    spec.out_path = std::string(experiment_name(id)) + ".csv";

    switch (id) {
        case ExperimentId::convergence:
            // 100 individuals, 8 subcarriers, 2000 generations.
            spec.subcarriers = {8};
            spec.population = 100;
            spec.memeplexes = 10;
            spec.generations = 2000;
            spec.seeds = seed_range(1, 10);
            break;
        case ExperimentId::subcarrier_sweep:
            // 50 individuals and a 10000-cycle budget.
            spec.subcarriers = {8, 16, 32, 64, 128, 256, 512};
            spec.population = 50;
            spec.memeplexes = 10;
            spec.generations = 10000;
            spec.seeds = seed_range(1, 10);
            break;
        case ExperimentId::memeplex_sweep:
            // population 100 at n = 8; m and generation grids are built in.
            spec.subcarriers = {8};
            spec.population = 100;
            spec.memeplexes = 10;
            spec.generations = 2000;
            spec.seeds = seed_range(1, 10);
            break;
        case ExperimentId::timing:
            spec.subcarriers = {8, 16, 32, 64, 128, 256, 512};
            spec.population = 100;
            spec.memeplexes = 10;
            spec.generations = 2000;
            spec.seeds = seed_range(1, 5);
            break;
        case ExperimentId::sfla_vs_ga:
            spec.subcarriers = {8, 16, 32, 64, 128, 256};
            spec.population = 50;
            spec.memeplexes = 10;
            spec.generations = 10000;
            spec.seeds = seed_range(1, 10);
            break;
        case ExperimentId::oracle_check:
            spec.subcarriers = {1};
            spec.population = 100;
            spec.memeplexes = 10;
            spec.generations = 200;
            spec.seeds = seed_range(1, 20);
            spec.jump_rule = JumpRule::paper_absolute;
            break;
    }
    return spec;
}

void ExperimentSpec::validate() const {
    if (modes.empty()) throw ValidationError("mode list is empty");
    if (subcarriers.empty()) throw ValidationError("n list is empty");
    for (int n : subcarriers)
        if (n < 1) throw ValidationError("n must be >= 1");
    if (population < 2) throw ValidationError("pop must be >= 2");
    if (memeplexes < 1) throw ValidationError("memeplexes must be >= 1");
    if (memeplexes > population) throw ValidationError("memeplexes cannot exceed pop");
    if (generations < 0) throw ValidationError("generations must be >= 0");
    if (local_iterations < 1) throw ValidationError("local_iterations must be >= 1");
    if (seeds.empty()) throw ValidationError("seeds list is empty");
    if (out_path.empty()) throw ValidationError("out path is empty");
}

ExperimentSpec parse_config(std::istream& in) {
    bool have_experiment = false;
    ExperimentSpec overrides;
    // Collected first so experiment defaults apply before overrides.
    std::vector<std::pair<std::string, std::pair<std::string, int>>> pairs;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value', got '" + line + "'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("missing key before '='", line_no);
        if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no);
        pairs.emplace_back(key, std::make_pair(value, line_no));
    }

    ExperimentSpec spec;
    for (const auto& [key, vl] : pairs) {
        if (key == "experiment") {
            spec = defaults_for(experiment_from_name(vl.first));
            have_experiment = true;
            break;
        }
    }
    if (!have_experiment) throw ValidationError("config must set 'experiment'");

    for (const auto& [key, vl] : pairs) {
        const auto& [value, line] = vl;
        if (key == "experiment") {
            continue;
        } else if (key == "mode") {
            spec.modes.clear();
            for (const auto& tok : split_list(value)) spec.modes.push_back(mode_from_name(tok));
        } else if (key == "n") {
            spec.subcarriers.clear();
            for (const auto& tok : split_list(value))
                spec.subcarriers.push_back(static_cast<int>(parse_int(tok, "n", line)));
        } else if (key == "pop") {
            spec.population = static_cast<int>(parse_int(value, "pop", line));
        } else if (key == "memeplexes") {
            spec.memeplexes = static_cast<int>(parse_int(value, "memeplexes", line));
        } else if (key == "generations") {
            spec.generations = static_cast<int>(parse_int(value, "generations", line));
        } else if (key == "local_iterations") {
            spec.local_iterations = static_cast<int>(parse_int(value, "local_iterations", line));
        } else if (key == "seeds") {
            spec.seeds.clear();
            for (const auto& tok : split_list(value))
                spec.seeds.push_back(static_cast<std::uint64_t>(parse_int(tok, "seeds", line)));
        } else if (key == "jump_rule") {
            spec.jump_rule = jump_rule_from_token(value);
        } else if (key == "out") {
            spec.out_path = value;
        } else if (key == "allow_n2") {
            if (value == "true")
                spec.allow_n2_oracle = true;
            else if (value == "false")
                spec.allow_n2_oracle = false;
            else
                throw ParseError("expected true|false for 'allow_n2', got '" + value + "'", line);
        } else {
            throw ParseError("unknown key '" + key + "'", line);
        }
    }

    spec.validate();
    return spec;
}

ExperimentSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    return parse_config(in);
}

std::string emit_config(const ExperimentSpec& spec) {
    std::ostringstream out;
    out << "experiment = " << experiment_name(spec.experiment) << "\n";
    out << "mode = ";
    for (std::size_t i = 0; i < spec.modes.size(); ++i)
        out << (i ? "," : "") << mode_name(spec.modes[i]);
    out << "\n";
    out << "n = ";
    for (std::size_t i = 0; i < spec.subcarriers.size(); ++i)
        out << (i ? "," : "") << spec.subcarriers[i];
    out << "\n";
    out << "pop = " << spec.population << "\n";
    out << "memeplexes = " << spec.memeplexes << "\n";
    out << "generations = " << spec.generations << "\n";
    out << "local_iterations = " << spec.local_iterations << "\n";
    out << "seeds = ";
    for (std::size_t i = 0; i < spec.seeds.size(); ++i) out << (i ? "," : "") << spec.seeds[i];
    out << "\n";
    out << "jump_rule = " << jump_rule_token(spec.jump_rule) << "\n";
    out << "out = " << spec.out_path << "\n";
    out << "allow_n2 = " << (spec.allow_n2_oracle ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace crqos
