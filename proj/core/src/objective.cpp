#include "crqos/objective.hpp"

#include <cmath>
#include <stdexcept>

#include "crqos/errors.hpp"

namespace crqos {

namespace {
constexpr double kLog2MMax = 10.0;       // log2(1024)
constexpr double kBerFloor = 1e-300;
const double kLog10Half = std::log10(0.5);
}  // namespace

const char* mode_name(TransmissionMode mode) {
    switch (mode) {
        case TransmissionMode::urgence: return "urgence";
        case TransmissionMode::multimedia: return "multimedia";
        case TransmissionMode::batterie_faible: return "batterie_faible";
    }
    return "?";
}

TransmissionMode mode_from_name(const std::string& name) {
    if (name == "urgence") return TransmissionMode::urgence;
    if (name == "multimedia") return TransmissionMode::multimedia;
    if (name == "batterie_faible") return TransmissionMode::batterie_faible;
    throw ValidationError("unknown mode '" + name +
                          "' (expected urgence | multimedia | batterie_faible)");
}

ModeWeights::ModeWeights(double w_rate, double w_ber, double w_power)
    : rate_(w_rate), ber_(w_ber), power_(w_power) {
    for (double w : {w_rate, w_ber, w_power})
        if (w < 0.0 || w > 1.0) throw std::domain_error("weights must lie in [0, 1]");
    if (std::abs(rate_ + ber_ + power_ - 1.0) > 1e-12)
        throw std::domain_error("weights must sum to 1");
}

ModeWeights mode_weights(TransmissionMode mode) {
    switch (mode) {
        case TransmissionMode::urgence: return {0.05, 0.80, 0.15};
        case TransmissionMode::multimedia: return {0.80, 0.05, 0.15};
        case TransmissionMode::batterie_faible: return {0.05, 0.15, 0.80};
    }
    throw std::domain_error("unknown transmission mode");
}

double throughput_objective(const TransmissionPlan& plan) {
    double bits = 0.0;
    for (const auto& s : plan.settings) {
        const int c = s.modulation.value();
        bits += (c == 1) ? 1 : c - 1;
    }
    return bits / (kLog2MMax * plan.size());
}

double ber_score(double mean_ber) {
    double p = mean_ber;
    if (p < kBerFloor) p = kBerFloor;
    if (p > 0.5) p = 0.5;
    return 1.0 - kLog10Half / std::log10(p);
}

double ber_objective(const TransmissionPlan& plan, const ChannelEnvironment& env) {
    if (plan.size() != env.size())
        throw std::domain_error("plan and environment subcarrier counts differ");
    double total = 0.0;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const double s = decode_power(plan.settings[i].power) / env.noise_lin()[i];
        total += ber_for_code(plan.settings[i].modulation, s);
    }
    return ber_score(total / plan.size());
}

double power_objective(const TransmissionPlan& plan) {
    double total = 0.0;
    for (const auto& s : plan.settings) total += decode_power(s.power);
    return 1.0 - total / (plan.size() * kPowerMaxMw);
}

ObjectiveBreakdown evaluate_fitness(const TransmissionPlan& plan, const ChannelEnvironment& env,
                                    const ModeWeights& weights) {
    if (plan.size() != env.size())
        throw std::domain_error("plan and environment subcarrier counts differ");

    const std::size_t n = plan.size();
    double bits = 0.0, power_sum = 0.0, ber_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = plan.settings[i];
        const int c = s.modulation.value();
        bits += (c == 1) ? 1 : c - 1;
        const double p = decode_power(s.power);
        power_sum += p;
        ber_sum += ber_for_code(s.modulation, p / env.noise_lin()[i]);
    }

    ObjectiveBreakdown out;
    out.mean_ber = ber_sum / n;
    out.f_rate = bits / (kLog2MMax * n);
    out.f_ber = ber_score(out.mean_ber);
    out.f_power = 1.0 - power_sum / (n * kPowerMaxMw);
    out.fitness = weights.rate() * out.f_rate + weights.ber() * out.f_ber +
                  weights.power() * out.f_power;
    return out;
}

}  // namespace crqos
