#include "crqos/ga.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "crqos/errors.hpp"

namespace crqos {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::size_t best_index(const std::vector<Frog>& frogs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < frogs.size(); ++i)
        if (frogs[i].fitness > frogs[best].fitness) best = i;
    return best;
}

std::size_t tournament_pick(const std::vector<Frog>& population, int rounds, Rng& rng) {
    std::size_t winner = static_cast<std::size_t>(rng.next_int(0, population.size() - 1));
    for (int i = 1; i < rounds; ++i) {
        const auto challenger = static_cast<std::size_t>(rng.next_int(0, population.size() - 1));
        if (population[challenger].fitness > population[winner].fitness) winner = challenger;
    }
    return winner;
}

// Genes are the flattened code vector: power, modulation, power, modulation, ...
void crossover_single_point(TransmissionPlan& a, TransmissionPlan& b, Rng& rng) {
    const int genes = static_cast<int>(a.size()) * 2;
    const int cut = rng.next_int(1, genes - 1);
    for (int g = cut; g < genes; ++g) {
        auto& sa = a.settings[g / 2];
        auto& sb = b.settings[g / 2];
        if (g % 2 == 0)
            std::swap(sa.power, sb.power);
        else
            std::swap(sa.modulation, sb.modulation);
    }
}

void mutate(TransmissionPlan& plan, double rate, Rng& rng) {
    for (auto& s : plan.settings) {
        if (rng.next_unit() < rate) s.power = PowerCode{rng.next_int(0, kPowerCodeMax)};
        if (rng.next_unit() < rate)
            s.modulation = ModulationCode{rng.next_int(kModulationCodeMin, kModulationCodeMax)};
    }
}

}  // namespace

void GaConfig::validate() const {
    if (population_size < 2) throw ValidationError("population_size must be >= 2");
    if (generations < 0) throw ValidationError("generations must be >= 0");
    if (tournament_size < 2) throw ValidationError("tournament_size must be >= 2");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
        throw ValidationError("crossover_rate must lie in [0, 1]");
    if (mutation_rate && (*mutation_rate < 0.0 || *mutation_rate > 1.0))
        throw ValidationError("mutation_rate must lie in [0, 1]");
    if (elitism_count < 0) throw ValidationError("elitism_count must be >= 0");
    if (elitism_count >= population_size)
        throw ValidationError("elitism_count must be below population_size");
}

RunTrace run_ga(const GaConfig& config, const ChannelEnvironment& env,
                const ModeWeights& weights) {
    return run_ga(config, env, weights, GenerationObserver{});
}

RunTrace run_ga(const GaConfig& config, const ChannelEnvironment& env,
                const ModeWeights& weights, const GenerationObserver& observer) {
    config.validate();
    const auto start = Clock::now();
    const double rate = config.mutation_rate.value_or(1.0 / (2.0 * env.size()));
    Rng rng(config.seed);

    std::vector<Frog> population;
    population.reserve(config.population_size);
    for (int i = 0; i < config.population_size; ++i) {
        Frog frog{random_plan(env.size(), rng), 0.0};
        frog.fitness = evaluate_fitness(frog.plan, env, weights).fitness;
        population.push_back(std::move(frog));
    }

    RunTrace trace;
    trace.best = population[best_index(population)];

    auto record = [&](int generation) {
        GenerationRecord rec;
        rec.generation = generation;
        rec.best_fitness = trace.best.fitness;
        rec.best = evaluate_fitness(trace.best.plan, env, weights);
        rec.elapsed_ms = ms_since(start);
        trace.records.push_back(rec);
    };

    record(0);
    if (observer) observer(0, population);

    std::vector<Frog> next;
    next.reserve(config.population_size);
    for (int gen = 1; gen <= config.generations; ++gen) {
        next.clear();

        if (config.elitism_count > 0) {
            std::vector<Frog> ranked = population;
            std::stable_sort(ranked.begin(), ranked.end(),
                             [](const Frog& a, const Frog& b) { return a.fitness > b.fitness; });
            for (int e = 0; e < config.elitism_count; ++e) next.push_back(ranked[e]);
        }

        while (static_cast<int>(next.size()) < config.population_size) {
            TransmissionPlan child_a = population[tournament_pick(population, config.tournament_size, rng)].plan;
            TransmissionPlan child_b = population[tournament_pick(population, config.tournament_size, rng)].plan;
            if (rng.next_unit() < config.crossover_rate)
                crossover_single_point(child_a, child_b, rng);

            for (TransmissionPlan* child : {&child_a, &child_b}) {
                if (static_cast<int>(next.size()) >= config.population_size) break;
                mutate(*child, rate, rng);
                Frog frog{std::move(*child), 0.0};
                frog.fitness = evaluate_fitness(frog.plan, env, weights).fitness;
                next.push_back(std::move(frog));
            }
        }
        population.swap(next);

        const Frog& gen_best = population[best_index(population)];
        if (gen_best.fitness > trace.best.fitness) trace.best = gen_best;

        record(gen);
        if (observer) observer(gen, population);
    }
    return trace;
}

}  // namespace crqos
