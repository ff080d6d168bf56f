#pragma once

#include <string>

#include "crqos/radio.hpp"

namespace crqos {

/// QoS priority profile. Each mode is a fixed weight triple over
/// (throughput, error-rate, energy).
enum class TransmissionMode { urgence, multimedia, batterie_faible };

const char* mode_name(TransmissionMode mode);
TransmissionMode mode_from_name(const std::string& name);

/// Weighted-sum coefficients; must sum to 1.
class ModeWeights {
  public:
    ModeWeights(double w_rate, double w_ber, double w_power);
    double rate() const { return rate_; }
    double ber() const { return ber_; }
    double power() const { return power_; }

  private:
    double rate_, ber_, power_;
};

ModeWeights mode_weights(TransmissionMode mode);

/// All three normalized criteria plus their weighted sum.
struct ObjectiveBreakdown {
    double f_rate = 0.0;
    double f_ber = 0.0;
    double f_power = 0.0;
    double fitness = 0.0;
    double mean_ber = 0.0;
};

/// Mean over subcarriers of log2(M_i)/log2(1024), in [0.1, 1].
double throughput_objective(const TransmissionPlan& plan);

/// The scalar error-rate criterion 1 - log10(0.5)/log10(p), with p clamped
/// to [1e-300, 0.5]. Exposed separately so the mapping is testable on its own.
double ber_score(double mean_ber);

/// ber_score of the arithmetic mean of per-subcarrier BERs.
double ber_objective(const TransmissionPlan& plan, const ChannelEnvironment& env);

/// 1 - sum(P_i) / (n * P_max), in [0, 1 - 0.1/2.4808].
double power_objective(const TransmissionPlan& plan);

/// Full evaluation; throws std::domain_error when plan and environment
/// disagree on the subcarrier count.
ObjectiveBreakdown evaluate_fitness(const TransmissionPlan& plan,
                                    const ChannelEnvironment& env,
                                    const ModeWeights& weights);

}  // namespace crqos
