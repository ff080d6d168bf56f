#pragma once

#include <cstdint>
#include <optional>

#include "crqos/objective.hpp"
#include "crqos/radio.hpp"
#include "crqos/sfla.hpp"
#include "crqos/trace.hpp"

namespace crqos {

/// Generational GA over the same plan encoding: elitism carryover, tournament
/// selection, single-point crossover on the flattened code vector, per-gene
/// uniform-reset mutation.
struct GaConfig {
    int population_size = 100;
    int generations = 2000;
    int tournament_size = 3;
    double crossover_rate = 0.9;
    /// Per-gene reset probability; defaults to 1/(2n) at run time.
    std::optional<double> mutation_rate;
    int elitism_count = 1;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Same trace schema as run_sfla, so comparison code is shared.
RunTrace run_ga(const GaConfig& config, const ChannelEnvironment& env,
                const ModeWeights& weights);
RunTrace run_ga(const GaConfig& config, const ChannelEnvironment& env,
                const ModeWeights& weights, const GenerationObserver& observer);

}  // namespace crqos
