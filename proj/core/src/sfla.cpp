#include "crqos/sfla.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "crqos/errors.hpp"

namespace crqos {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void sort_by_fitness_desc(std::vector<Frog>& frogs) {
    // Stable: equal fitness keeps insertion order, so reruns are bit-identical.
    std::stable_sort(frogs.begin(), frogs.end(),
                     [](const Frog& a, const Frog& b) { return a.fitness > b.fitness; });
}

std::size_t best_index(const std::vector<Frog>& frogs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < frogs.size(); ++i)
        if (frogs[i].fitness > frogs[best].fitness) best = i;
    return best;
}

std::size_t worst_index(const std::vector<Frog>& frogs) {
    // Last position on ties, so a degenerate all-equal memeplex replaces its tail.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < frogs.size(); ++i)
        if (frogs[i].fitness <= frogs[worst].fitness) worst = i;
    return worst;
}

}  // namespace

void SflaConfig::validate() const {
    if (population_size < 2) throw ValidationError("population_size must be >= 2");
    if (memeplexes < 1) throw ValidationError("memeplexes must be >= 1");
    if (memeplexes > population_size)
        throw ValidationError("memeplexes cannot exceed population_size");
    if (local_iterations < 1) throw ValidationError("local_iterations must be >= 1");
    if (generations < 0) throw ValidationError("generations must be >= 0");
    if (max_step && *max_step < 1) throw ValidationError("max_step must be >= 1 when set");
}

std::vector<Frog> init_population(const SflaConfig& config, const ChannelEnvironment& env,
                                  const ModeWeights& weights, Rng& rng) {
    std::vector<Frog> population;
    population.reserve(config.population_size);
    for (int i = 0; i < config.population_size; ++i) {
        Frog frog{random_plan(env.size(), rng), 0.0};
        frog.fitness = evaluate_fitness(frog.plan, env, weights).fitness;
        population.push_back(std::move(frog));
    }
    return population;
}

std::vector<std::vector<Frog>> partition(const std::vector<Frog>& sorted_population,
                                         int memeplexes) {
    if (memeplexes < 1 || static_cast<std::size_t>(memeplexes) > sorted_population.size())
        throw ValidationError("memeplex count must be in [1, population size]");
    std::vector<std::vector<Frog>> out(memeplexes);
    for (std::size_t rank = 0; rank < sorted_population.size(); ++rank)
        out[rank % memeplexes].push_back(sorted_population[rank]);
    return out;
}

std::vector<Frog> merge(const std::vector<std::vector<Frog>>& memeplexes) {
    const std::size_t m = memeplexes.size();
    std::size_t total = 0;
    for (const auto& mem : memeplexes) total += mem.size();
    std::vector<Frog> out;
    out.reserve(total);
    for (std::size_t rank = 0; rank < total; ++rank)
        out.push_back(memeplexes[rank % m][rank / m]);
    return out;
}

int jump_component(int worst, int guide, double r, JumpRule rule,
                   std::optional<int> max_step, int lo, int hi) {
    const double gap = static_cast<double>(guide - worst);
    const double raw = (rule == JumpRule::paper_absolute) ? r * std::abs(gap) : r * gap;
    int step = static_cast<int>(std::floor(raw + 0.5));  // round half up
    if (max_step) step = std::clamp(step, -*max_step, *max_step);
    return std::clamp(worst + step, lo, hi);
}

TransmissionPlan jump(const TransmissionPlan& worst, const TransmissionPlan& guide, Rng& rng,
                      const SflaConfig& config) {
    TransmissionPlan candidate;
    candidate.settings.reserve(worst.size());
    for (std::size_t i = 0; i < worst.size(); ++i) {
        const int p = jump_component(worst.settings[i].power.value(),
                                     guide.settings[i].power.value(), rng.next_unit(),
                                     config.jump_rule, config.max_step, 0, kPowerCodeMax);
        const int m = jump_component(worst.settings[i].modulation.value(),
                                     guide.settings[i].modulation.value(), rng.next_unit(),
                                     config.jump_rule, config.max_step, kModulationCodeMin,
                                     kModulationCodeMax);
        candidate.settings.push_back({PowerCode{p}, ModulationCode{m}});
    }
    return candidate;
}

void improve_memeplex(std::vector<Frog>& memeplex, const Frog& global_best,
                      const ChannelEnvironment& env, const ModeWeights& weights, Rng& rng,
                      const SflaConfig& config) {
    for (int it = 0; it < config.local_iterations; ++it) {
        const std::size_t bi = best_index(memeplex);
        const std::size_t wi = worst_index(memeplex);
        Frog& worst = memeplex[wi];

        TransmissionPlan candidate = jump(worst.plan, memeplex[bi].plan, rng, config);
        double f = evaluate_fitness(candidate, env, weights).fitness;
        if (f > worst.fitness) {
            worst = {std::move(candidate), f};
            continue;
        }
        candidate = jump(worst.plan, global_best.plan, rng, config);
        f = evaluate_fitness(candidate, env, weights).fitness;
        if (f > worst.fitness) {
            worst = {std::move(candidate), f};
            continue;
        }
        candidate = random_plan(env.size(), rng);
        f = evaluate_fitness(candidate, env, weights).fitness;
        worst = {std::move(candidate), f};
    }
}

RunTrace run_sfla(const SflaConfig& config, const ChannelEnvironment& env,
                  const ModeWeights& weights) {
    return run_sfla(config, env, weights, GenerationObserver{});
}

RunTrace run_sfla(const SflaConfig& config, const ChannelEnvironment& env,
                  const ModeWeights& weights, const GenerationObserver& observer) {
    config.validate();
    const auto start = Clock::now();
    Rng rng(config.seed);

    std::vector<Frog> population = init_population(config, env, weights, rng);

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

    for (int gen = 1; gen <= config.generations; ++gen) {
        sort_by_fitness_desc(population);
        const Frog global_best = population.front();

        auto memeplexes = partition(population, config.memeplexes);
        for (auto& memeplex : memeplexes)
            improve_memeplex(memeplex, global_best, env, weights, rng, config);
        population = merge(memeplexes);

        const Frog& gen_best = population[best_index(population)];
        if (gen_best.fitness > trace.best.fitness) trace.best = gen_best;

        record(gen);
        if (observer) observer(gen, population);
    }
    return trace;
}

}  // namespace crqos
