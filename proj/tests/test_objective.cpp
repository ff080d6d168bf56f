#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "crqos/objective.hpp"
#include "doctest.h"

using namespace crqos;

namespace {

TransmissionPlan uniform_plan(std::size_t n, int power, int modulation) {
    TransmissionPlan plan;
    for (std::size_t i = 0; i < n; ++i)
        plan.settings.push_back({PowerCode{power}, ModulationCode{modulation}});
    return plan;
}

ChannelEnvironment flat_env(std::size_t n, double atten_db) {
    return ChannelEnvironment(std::vector<double>(n, atten_db));
}

}  // namespace

TEST_SUITE_BEGIN("objective");

TEST_CASE("mode weights match the three transmission modes") {
    const auto urg = mode_weights(TransmissionMode::urgence);
    CHECK(urg.rate() == 0.05);
    CHECK(urg.ber() == 0.80);
    CHECK(urg.power() == 0.15);

    const auto mm = mode_weights(TransmissionMode::multimedia);
    CHECK(mm.rate() == 0.80);
    CHECK(mm.ber() == 0.05);
    CHECK(mm.power() == 0.15);

    const auto bat = mode_weights(TransmissionMode::batterie_faible);
    CHECK(bat.rate() == 0.05);
    CHECK(bat.ber() == 0.15);
    CHECK(bat.power() == 0.80);
}

TEST_CASE("mode names round-trip") {
    for (auto mode : {TransmissionMode::urgence, TransmissionMode::multimedia,
                      TransmissionMode::batterie_faible})
        CHECK(mode_from_name(mode_name(mode)) == mode);
    CHECK_THROWS(mode_from_name("turbo"));
}

TEST_CASE("weights must sum to one") {
    CHECK_THROWS_AS(ModeWeights(0.5, 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(ModeWeights(-0.2, 0.6, 0.6), std::domain_error);
    CHECK_NOTHROW(ModeWeights(0.05, 0.80, 0.15));
}

TEST_CASE("throughput objective") {
    CHECK(throughput_objective(uniform_plan(4, 50, 11)) == 1.0);
    CHECK(throughput_objective(uniform_plan(4, 50, 1)) ==
          doctest::Approx(0.1).epsilon(1e-15));

    TransmissionPlan half;
    half.settings.push_back({PowerCode{0}, ModulationCode{11}});
    half.settings.push_back({PowerCode{0}, ModulationCode{1}});
    CHECK(throughput_objective(half) == doctest::Approx(0.55).epsilon(1e-15));
}

TEST_CASE("ber score anchor values") {
    CHECK(ber_score(0.5) == 0.0);
    CHECK(ber_score(0.05) == doctest::Approx(0.7686217868402408).epsilon(1e-14));
    // clamped tail: score approaches 1 as the mean BER vanishes
    CHECK(ber_score(0.0) > 0.998);
    CHECK(ber_score(1e-300) > 0.998);
    // above-0.5 means are clamped back to the zero of the objective
    CHECK(ber_score(0.7) == 0.0);
}

TEST_CASE("power objective anchor values") {
    CHECK(power_objective(uniform_plan(8, 93, 5)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(power_objective(uniform_plan(8, 0, 5)) ==
          doctest::Approx(0.9596904224443728).epsilon(1e-14));

    TransmissionPlan mix;
    mix.settings.push_back({PowerCode{0}, ModulationCode{5}});
    mix.settings.push_back({PowerCode{93}, ModulationCode{5}});
    CHECK(power_objective(mix) == doctest::Approx(0.4798452112221864).epsilon(1e-14));
}

TEST_CASE("full fitness chain at the codebook corner") {
    // n=1, max power, 1024QAM, 0 dB attenuation:
    // f_rate = 1, f_power = 0, f_ber = ber_score(ber(1024QAM, 2.4808))
    const auto env = flat_env(1, 0.0);
    const auto plan = uniform_plan(1, 93, 11);
    const auto b = evaluate_fitness(plan, env, mode_weights(TransmissionMode::multimedia));
    CHECK(b.f_rate == 1.0);
    CHECK(b.f_power == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(b.mean_ber == doctest::Approx(0.15220045355218223).epsilon(1e-13));
    CHECK(b.f_ber == doctest::Approx(0.6318054462789221).epsilon(1e-13));
    CHECK(b.fitness == doctest::Approx(0.8315902723139461).epsilon(1e-13));
}

TEST_CASE("fitness is the stated convex combination") {
    Rng rng(11);
    const auto env = sample_environment(8, rng);
    for (int trial = 0; trial < 100; ++trial) {
        const auto plan = random_plan(8, rng);
        for (auto mode : {TransmissionMode::urgence, TransmissionMode::multimedia,
                          TransmissionMode::batterie_faible}) {
            const auto w = mode_weights(mode);
            const auto b = evaluate_fitness(plan, env, w);
            const double expected =
                w.rate() * b.f_rate + w.ber() * b.f_ber + w.power() * b.f_power;
            CHECK(b.fitness == doctest::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("objectives and fitness stay in [0, 1] for random plans") {
    Rng rng(99);
    const auto env = sample_environment(16, rng);
    for (int trial = 0; trial < 300; ++trial) {
        const auto plan = random_plan(16, rng);
        const auto b = evaluate_fitness(plan, env, mode_weights(TransmissionMode::urgence));
        for (double v : {b.f_rate, b.f_ber, b.f_power, b.fitness}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("raising one subcarrier's power never lowers the ber objective") {
    Rng rng(31);
    const auto env = sample_environment(8, rng);
    for (int trial = 0; trial < 60; ++trial) {
        auto plan = random_plan(8, rng);
        const std::size_t i = trial % 8;
        const int p = plan.settings[i].power.value();
        if (p == 93) continue;
        const double before = ber_objective(plan, env);
        plan.settings[i].power = PowerCode{p + 1};
        const double after = ber_objective(plan, env);
        CHECK(after >= before);
    }
}

TEST_CASE("power objective strictly decreases when any code increases") {
    Rng rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        auto plan = random_plan(6, rng);
        const std::size_t i = trial % 6;
        const int p = plan.settings[i].power.value();
        if (p == 93) continue;
        const double before = power_objective(plan);
        plan.settings[i].power = PowerCode{p + 1};
        CHECK(power_objective(plan) < before);
    }
}

TEST_CASE("throughput strictly increases with any modulation code above 1") {
    Rng rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        auto plan = random_plan(6, rng);
        const std::size_t i = trial % 6;
        const int m = plan.settings[i].modulation.value();
        if (m < 2 || m == 11) continue;
        const double before = throughput_objective(plan);
        plan.settings[i].modulation = ModulationCode{m + 1};
        CHECK(throughput_objective(plan) > before);
    }
}

TEST_CASE("rescaled-and-renormalized weights preserve plan ranking") {
    Rng rng(55);
    const auto env = sample_environment(4, rng);
    std::vector<TransmissionPlan> plans;
    for (int i = 0; i < 40; ++i) plans.push_back(random_plan(4, rng));

    const double raw[3] = {0.2, 0.5, 0.3};
    for (double k : {0.25, 1.0, 7.5}) {
        const double sum = k * (raw[0] + raw[1] + raw[2]);
        const ModeWeights base{raw[0], raw[1], raw[2]};
        const ModeWeights scaled{k * raw[0] / sum, k * raw[1] / sum, k * raw[2] / sum};

        auto rank = [&](const ModeWeights& w) {
            std::vector<std::size_t> order(plans.size());
            std::iota(order.begin(), order.end(), 0u);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return evaluate_fitness(plans[a], env, w).fitness >
                       evaluate_fitness(plans[b], env, w).fitness;
            });
            return order;
        };
        CHECK(rank(base) == rank(scaled));
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const auto env = flat_env(4, 0.3);
    const auto plan = uniform_plan(3, 10, 5);
    CHECK_THROWS_AS(evaluate_fitness(plan, env, mode_weights(TransmissionMode::urgence)),
                    std::domain_error);
    CHECK_THROWS_AS(ber_objective(plan, env), std::domain_error);
}

TEST_SUITE_END();
