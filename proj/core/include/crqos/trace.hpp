#pragma once

#include <cstdint>
#include <vector>

#include "crqos/objective.hpp"
#include "crqos/radio.hpp"

namespace crqos {

/// Candidate solution with its cached fitness. Shared by the SFLA and GA
/// engines; the cache is always in sync with the run's environment and weights.
struct Frog {
    TransmissionPlan plan;
    double fitness = 0.0;
};

/// One row of a run's convergence history. Record 0 is the best of the
/// initial random population; record g the best-so-far after g cycles.
struct GenerationRecord {
    int generation = 0;
    double best_fitness = 0.0;
    ObjectiveBreakdown best;
    std::int64_t elapsed_ms = 0;
};

/// Full run output, identical schema for SFLA and GA so analysis code can
/// treat them uniformly. best_fitness is monotone non-decreasing over records.
struct RunTrace {
    std::vector<GenerationRecord> records;
    Frog best;
};

}  // namespace crqos
