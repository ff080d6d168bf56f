#include "crqos/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "crqos/errors.hpp"

namespace crqos {

namespace {

using Clock = std::chrono::steady_clock;

/// Runs `work(0..count-1)` on a small pool. Cells are self-contained, so the
/// only shared state is the claim counter; output slots are pre-allocated by
/// the callers. The first worker exception is rethrown on the caller thread.
void run_cells(std::size_t count, const std::function<void(std::size_t)>& work) {
    if (count == 0) return;
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(count, hw == 0 ? 1 : hw);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto loop = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                work(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

ResultRow base_row(const ExperimentSpec& spec, TransmissionMode mode, int n, std::uint64_t seed) {
    ResultRow row;
    row.experiment = experiment_name(spec.experiment);
    row.mode = mode_name(mode);
    row.subcarriers = n;
    row.population = spec.population;
    row.memeplexes = spec.memeplexes;
    row.generations = spec.generations;
    row.seed = seed;
    return row;
}

void fill_breakdown(ResultRow& row, const ObjectiveBreakdown& b) {
    row.fitness = b.fitness;
    row.f_rate = b.f_rate;
    row.f_ber = b.f_ber;
    row.f_power = b.f_power;
}

ResultRow final_row(const ExperimentSpec& spec, TransmissionMode mode, int n, std::uint64_t seed,
                    const RunTrace& trace) {
    ResultRow row = base_row(spec, mode, n, seed);
    row.generation = "final";
    fill_breakdown(row, trace.records.back().best);
    row.elapsed_ms = trace.records.back().elapsed_ms;
    return row;
}

}  // namespace

std::string format_row(const ResultRow& row) {
    std::string out;
    out.reserve(160);
    out += row.experiment;
    out += ',';
    out += row.mode;
    out += ',';
    out += std::to_string(row.subcarriers);
    out += ',';
    out += std::to_string(row.population);
    out += ',';
    out += std::to_string(row.memeplexes);
    out += ',';
    out += std::to_string(row.generations);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.generation;
    out += ',';
    out += format_double(row.fitness);
    out += ',';
    out += format_double(row.f_rate);
    out += ',';
    out += format_double(row.f_ber);
    out += ',';
    out += format_double(row.f_power);
    out += ',';
    out += std::to_string(row.elapsed_ms);
    return out;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    out << kCsvHeader << '\n';
    for (const auto& row : rows) out << format_row(row) << '\n';
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

ChannelEnvironment environment_for_cell(int n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_environment(static_cast<std::size_t>(n), rng);
}

SflaConfig sfla_config_of(const ExperimentSpec& spec, std::uint64_t seed) {
    SflaConfig cfg;
    cfg.population_size = spec.population;
    cfg.memeplexes = spec.memeplexes;
    cfg.local_iterations = spec.local_iterations;
    cfg.generations = spec.generations;
    cfg.jump_rule = spec.jump_rule;
    cfg.seed = seed;
    return cfg;
}

GaConfig matched_ga(const ExperimentSpec& spec, std::uint64_t seed) {
    GaConfig cfg;
    cfg.population_size = spec.population;
    cfg.generations = spec.generations;
    cfg.seed = seed;
    return cfg;
}

OracleResult oracle_exhaustive(const ChannelEnvironment& env, const ModeWeights& weights,
                               bool allow_n2) {
    if (env.size() == 2 && !allow_n2)
        throw ValidationError("n = 2 oracle scans ~1.07M settings; pass allow_n2 to confirm");
    if (env.size() > 2)
        throw ValidationError("exhaustive oracle is limited to n <= 2");

    OracleResult best;
    bool have = false;

    auto consider = [&](const TransmissionPlan& plan) {
        const ObjectiveBreakdown b = evaluate_fitness(plan, env, weights);
        if (!have || b.fitness > best.breakdown.fitness) {
            best = {plan, b};
            have = true;
        }
    };

    TransmissionPlan plan;
    if (env.size() == 1) {
        for (int p = 0; p <= kPowerCodeMax; ++p)
            for (int m = kModulationCodeMin; m <= kModulationCodeMax; ++m) {
                plan.settings = {{PowerCode{p}, ModulationCode{m}}};
                consider(plan);
            }
    } else {
        for (int p0 = 0; p0 <= kPowerCodeMax; ++p0)
            for (int m0 = kModulationCodeMin; m0 <= kModulationCodeMax; ++m0)
                for (int p1 = 0; p1 <= kPowerCodeMax; ++p1)
                    for (int m1 = kModulationCodeMin; m1 <= kModulationCodeMax; ++m1) {
                        plan.settings = {{PowerCode{p0}, ModulationCode{m0}},
                                         {PowerCode{p1}, ModulationCode{m1}}};
                        consider(plan);
                    }
    }
    return best;
}

std::vector<ResultRow> run_convergence(const ExperimentSpec& spec) {
    spec.validate();
    struct Cell {
        TransmissionMode mode;
        int n;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (TransmissionMode mode : spec.modes)
        for (int n : spec.subcarriers)
            for (std::uint64_t seed : spec.seeds) cells.push_back({mode, n, seed});

    std::vector<std::vector<ResultRow>> per_cell(cells.size());
    run_cells(cells.size(), [&](std::size_t i) {
        const auto [mode, n, seed] = cells[i];
        const ChannelEnvironment env = environment_for_cell(n, seed);
        const RunTrace trace = run_sfla(sfla_config_of(spec, seed), env, mode_weights(mode));

        auto& rows = per_cell[i];
        rows.reserve(trace.records.size() + 1);
        for (const auto& rec : trace.records) {
            ResultRow row = base_row(spec, mode, n, seed);
            row.generation = std::to_string(rec.generation);
            fill_breakdown(row, rec.best);
            row.elapsed_ms = rec.elapsed_ms;
            rows.push_back(std::move(row));
        }
        rows.push_back(final_row(spec, mode, n, seed, trace));
    });

    std::vector<ResultRow> rows;
    for (auto& cell_rows : per_cell)
        rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
    return rows;
}

std::vector<ResultRow> run_subcarrier_sweep(const ExperimentSpec& spec) {
    spec.validate();
    struct Cell {
        TransmissionMode mode;
        int n;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (TransmissionMode mode : spec.modes)
        for (int n : spec.subcarriers)
            for (std::uint64_t seed : spec.seeds) cells.push_back({mode, n, seed});

    std::vector<ResultRow> rows(cells.size());
    run_cells(cells.size(), [&](std::size_t i) {
        const auto [mode, n, seed] = cells[i];
        const ChannelEnvironment env = environment_for_cell(n, seed);
        const RunTrace trace = run_sfla(sfla_config_of(spec, seed), env, mode_weights(mode));
        rows[i] = final_row(spec, mode, n, seed, trace);
    });
    return rows;
}

std::vector<ResultRow> run_memeplex_sweep(const ExperimentSpec& spec) {
    spec.validate();
    static constexpr int kGroups[] = {5, 10, 15};
    static constexpr int kGenerations[] = {500, 1000, 1500, 2000};

    struct Cell {
        TransmissionMode mode;
        int m;
        int generations;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (TransmissionMode mode : spec.modes)
        for (int m : kGroups)
            for (int generations : kGenerations)
                for (std::uint64_t seed : spec.seeds) cells.push_back({mode, m, generations, seed});

    const int n = spec.subcarriers.front();
    std::vector<ResultRow> rows(cells.size());
    run_cells(cells.size(), [&](std::size_t i) {
        const auto [mode, m, generations, seed] = cells[i];
        ExperimentSpec cell_spec = spec;
        cell_spec.memeplexes = m;
        cell_spec.generations = generations;
        const ChannelEnvironment env = environment_for_cell(n, seed);
        const RunTrace trace =
            run_sfla(sfla_config_of(cell_spec, seed), env, mode_weights(mode));
        rows[i] = final_row(cell_spec, mode, n, seed, trace);
    });
    return rows;
}

std::vector<ResultRow> run_timing(const ExperimentSpec& spec) {
    // Same cell layout as the subcarrier sweep; the payload is elapsed_ms.
    return run_subcarrier_sweep(spec);
}

std::vector<ResultRow> run_sfla_vs_ga(const ExperimentSpec& spec) {
    spec.validate();
    struct Cell {
        TransmissionMode mode;
        int n;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (TransmissionMode mode : spec.modes)
        for (int n : spec.subcarriers)
            for (std::uint64_t seed : spec.seeds) cells.push_back({mode, n, seed});

    std::vector<ResultRow> sfla_rows(cells.size());
    std::vector<ResultRow> ga_rows(cells.size());
    run_cells(cells.size(), [&](std::size_t i) {
        const auto [mode, n, seed] = cells[i];
        const ChannelEnvironment env = environment_for_cell(n, seed);
        const ModeWeights weights = mode_weights(mode);

        const RunTrace sfla_trace = run_sfla(sfla_config_of(spec, seed), env, weights);
        ResultRow srow = final_row(spec, mode, n, seed, sfla_trace);
        srow.experiment = "sfla_vs_ga_sfla";
        sfla_rows[i] = std::move(srow);

        const RunTrace ga_trace = run_ga(matched_ga(spec, seed), env, weights);
        ResultRow grow = final_row(spec, mode, n, seed, ga_trace);
        grow.experiment = "sfla_vs_ga_ga";
        grow.memeplexes = 0;  // not applicable to the GA
        ga_rows[i] = std::move(grow);
    });

    std::vector<ResultRow> rows;
    rows.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        rows.push_back(std::move(sfla_rows[i]));
        rows.push_back(std::move(ga_rows[i]));
    }
    return rows;
}

std::vector<ResultRow> run_oracle_check(const ExperimentSpec& spec) {
    spec.validate();
    for (int n : spec.subcarriers)
        if (n > 2) throw ValidationError("oracle_check requires n <= 2");

    struct Cell {
        TransmissionMode mode;
        int n;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (TransmissionMode mode : spec.modes)
        for (int n : spec.subcarriers)
            for (std::uint64_t seed : spec.seeds) cells.push_back({mode, n, seed});

    std::vector<ResultRow> oracle_rows(cells.size());
    std::vector<ResultRow> sfla_rows(cells.size());
    run_cells(cells.size(), [&](std::size_t i) {
        const auto [mode, n, seed] = cells[i];
        const ChannelEnvironment env = environment_for_cell(n, seed);
        const ModeWeights weights = mode_weights(mode);

        const auto oracle_start = Clock::now();
        const OracleResult oracle = oracle_exhaustive(env, weights, spec.allow_n2_oracle);
        ResultRow orow = base_row(spec, mode, n, seed);
        orow.experiment = "oracle_check_oracle";
        orow.population = 0;
        orow.memeplexes = 0;
        orow.generations = 0;
        orow.generation = "final";
        fill_breakdown(orow, oracle.breakdown);
        orow.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                                oracle_start)
                              .count();
        oracle_rows[i] = std::move(orow);

        const RunTrace trace = run_sfla(sfla_config_of(spec, seed), env, weights);
        ResultRow srow = final_row(spec, mode, n, seed, trace);
        srow.experiment = "oracle_check_sfla";
        sfla_rows[i] = std::move(srow);
    });

    std::vector<ResultRow> rows;
    rows.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        rows.push_back(std::move(oracle_rows[i]));
        rows.push_back(std::move(sfla_rows[i]));
    }
    return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
    switch (spec.experiment) {
        case ExperimentId::convergence: return run_convergence(spec);
        case ExperimentId::subcarrier_sweep: return run_subcarrier_sweep(spec);
        case ExperimentId::memeplex_sweep: return run_memeplex_sweep(spec);
        case ExperimentId::timing: return run_timing(spec);
        case ExperimentId::sfla_vs_ga: return run_sfla_vs_ga(spec);
        case ExperimentId::oracle_check: return run_oracle_check(spec);
    }
    throw ValidationError("unknown experiment id");
}

}  // namespace crqos
