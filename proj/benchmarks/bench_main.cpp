#include <benchmark/benchmark.h>

#include "crqos/experiments.hpp"

using namespace crqos;

static void BM_QApprox(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_approx(x));
        x += 1e-6;
        if (x > 8.0) x = 0.0;
    }
}
BENCHMARK(BM_QApprox);

static void BM_Ber1024Qam(benchmark::State& state) {
    const ModulationCode code{11};
    double s = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ber_for_code(code, s));
        s += 1e-6;
        if (s > 2.4) s = 0.1;
    }
}
BENCHMARK(BM_Ber1024Qam);

static void BM_FitnessEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(1);
    const auto env = sample_environment(n, rng);
    const auto plan = random_plan(n, rng);
    const auto w = mode_weights(TransmissionMode::multimedia);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_fitness(plan, env, w).fitness);
    state.SetComplexityN(n);
}
BENCHMARK(BM_FitnessEval)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oN);

static void BM_SflaCycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SflaConfig cfg;
    cfg.population_size = 50;
    cfg.memeplexes = 10;
    cfg.local_iterations = 10;
    cfg.jump_rule = JumpRule::signed_classic;
    const auto env = environment_for_cell(n, 1);
    const auto w = mode_weights(TransmissionMode::batterie_faible);
    for (auto _ : state) {
        state.PauseTiming();
        cfg.generations = 1;
        state.ResumeTiming();
        benchmark::DoNotOptimize(run_sfla(cfg, env, w).best.fitness);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SflaCycle)->RangeMultiplier(4)->Range(8, 128)->Complexity(benchmark::oN);

static void BM_OracleExhaustive(benchmark::State& state) {
    const auto env = environment_for_cell(1, 3);
    const auto w = mode_weights(TransmissionMode::urgence);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_exhaustive(env, w).breakdown.fitness);
}
BENCHMARK(BM_OracleExhaustive);

BENCHMARK_MAIN();
