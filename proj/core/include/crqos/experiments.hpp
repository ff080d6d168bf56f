#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crqos/ga.hpp"
#include "crqos/objective.hpp"
#include "crqos/sfla.hpp"

namespace crqos {

enum class ExperimentId {
    convergence,
    subcarrier_sweep,
    memeplex_sweep,
    timing,
    sfla_vs_ga,
    oracle_check,
};

const char* experiment_name(ExperimentId id);
ExperimentId experiment_from_name(const std::string& name);

/// A fully resolved experiment request. defaults_for() fills in the
/// paper-study configuration of each experiment; parse_config/CLI flags
/// override individual fields.
struct ExperimentSpec {
    ExperimentId experiment = ExperimentId::convergence;
    std::vector<TransmissionMode> modes;   // default: all three
    std::vector<int> subcarriers;          // n list
    int population = 100;                  // F
    int memeplexes = 10;                   // m
    int generations = 2000;                // shuffle cycles
    int local_iterations = 10;
    std::vector<std::uint64_t> seeds;
    JumpRule jump_rule = JumpRule::signed_classic;
    std::string out_path;
    bool allow_n2_oracle = false;          // opt-in for the 1.07M-point n=2 oracle

    void validate() const;
};

/// Paper-study defaults per experiment (population, budget, n grid, seeds).
ExperimentSpec defaults_for(ExperimentId id);

/// Flat key = value config file. Unknown keys and malformed lines raise
/// ParseError with the line number; range violations raise ValidationError.
ExperimentSpec parse_config(std::istream& in);
ExperimentSpec parse_config_file(const std::string& path);

/// Inverse of parse_config: emits a file that parses back to `spec`.
std::string emit_config(const ExperimentSpec& spec);

/// One CSV record. `generation` is a numeric index or "final".
struct ResultRow {
    std::string experiment;
    std::string mode;
    int subcarriers = 0;
    int population = 0;
    int memeplexes = 0;
    int generations = 0;
    std::uint64_t seed = 0;
    std::string generation;
    double fitness = 0.0;
    double f_rate = 0.0;
    double f_ber = 0.0;
    double f_power = 0.0;
    std::int64_t elapsed_ms = 0;
};

inline constexpr const char* kCsvHeader =
    "experiment,mode,n,F,m,generations,seed,generation,fitness,f_rate,f_ber,f_power,elapsed_ms";

std::string format_row(const ResultRow& row);
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);

/// Exhaustive scan of all 94*11 settings per subcarrier. Accepts n = 1;
/// n = 2 (1034^2 evaluations) only when allow_n2 is set; larger n refuses.
struct OracleResult {
    TransmissionPlan plan;
    ObjectiveBreakdown breakdown;
};
OracleResult oracle_exhaustive(const ChannelEnvironment& env, const ModeWeights& weights,
                               bool allow_n2 = false);

/// Experiment runners. Each returns the rows it would persist; the CLI
/// couples them with write_csv. Independent (mode, n, seed) cells are
/// dispatched to a small worker pool; row order is deterministic.
std::vector<ResultRow> run_convergence(const ExperimentSpec& spec);
std::vector<ResultRow> run_subcarrier_sweep(const ExperimentSpec& spec);
std::vector<ResultRow> run_memeplex_sweep(const ExperimentSpec& spec);
std::vector<ResultRow> run_timing(const ExperimentSpec& spec);
std::vector<ResultRow> run_sfla_vs_ga(const ExperimentSpec& spec);
std::vector<ResultRow> run_oracle_check(const ExperimentSpec& spec);

/// Dispatch on spec.experiment.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

/// The channel a cell sees depends only on (n, seed), so every algorithm and
/// mode in a comparison shares the same draw.
ChannelEnvironment environment_for_cell(int n, std::uint64_t seed);

/// GA settings matched to an SFLA run: same population and cycle count,
/// textbook operator rates.
GaConfig matched_ga(const ExperimentSpec& spec, std::uint64_t seed);
SflaConfig sfla_config_of(const ExperimentSpec& spec, std::uint64_t seed);

}  // namespace crqos
