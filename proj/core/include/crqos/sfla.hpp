#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "crqos/objective.hpp"
#include "crqos/radio.hpp"
#include "crqos/rng.hpp"
#include "crqos/trace.hpp"

namespace crqos {

/// Worst-frog update rule. paper_absolute adds r*|guide - worst| (step is
/// never negative, so codes only drift upward and the search leans on the
/// random-replacement branch); signed_classic adds r*(guide - worst), the
/// usual frog leap toward the guide.
enum class JumpRule { paper_absolute, signed_classic };

struct SflaConfig {
    int population_size = 100;   // F
    int memeplexes = 10;         // m
    int local_iterations = 10;   // worst-frog updates per memeplex per cycle
    int generations = 2000;      // shuffle cycles
    JumpRule jump_rule = JumpRule::paper_absolute;
    std::optional<int> max_step; // clamp on |step| when set
    std::uint64_t seed = 1;

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

/// Called after the initial evaluation (generation 0) and after every shuffle
/// cycle with the current population. Test hook; does not affect the run.
using GenerationObserver = std::function<void(int generation, std::span<const Frog>)>;

/// F frogs with uniformly drawn codes, fitness evaluated and cached.
std::vector<Frog> init_population(const SflaConfig& config,
                                  const ChannelEnvironment& env,
                                  const ModeWeights& weights,
                                  Rng& rng);

/// Interleaved split of a fitness-sorted population: sorted rank k goes to
/// memeplex k mod m. Sizes differ by at most one.
std::vector<std::vector<Frog>> partition(const std::vector<Frog>& sorted_population, int memeplexes);

/// Inverse of partition: frog j of memeplex i returns to position j*m + i.
std::vector<Frog> merge(const std::vector<std::vector<Frog>>& memeplexes);

/// One parameter's leap. r is the uniform draw in [0, 1); the rounded step is
/// clamped to +/-max_step when set, and the result to [lo, hi].
int jump_component(int worst, int guide, double r, JumpRule rule,
                   std::optional<int> max_step, int lo, int hi);

/// Candidate plan built from a leap of `worst` guided by `guide`.
/// Draws one r per scalar parameter: per subcarrier, power first, then
/// modulation.
TransmissionPlan jump(const TransmissionPlan& worst, const TransmissionPlan& guide,
                      Rng& rng, const SflaConfig& config);

/// local_iterations rounds of the three-case worst-frog update:
/// leap toward the memeplex best, else toward the global best, else replace
/// with a fresh random frog. "Better" means strictly greater fitness.
void improve_memeplex(std::vector<Frog>& memeplex, const Frog& global_best,
                      const ChannelEnvironment& env, const ModeWeights& weights,
                      Rng& rng, const SflaConfig& config);

/// Full shuffled frog-leaping run. Bitwise deterministic for a fixed seed
/// (elapsed-ms fields aside). generations == 0 degenerates to the initial
/// population's best.
RunTrace run_sfla(const SflaConfig& config, const ChannelEnvironment& env,
                  const ModeWeights& weights);
RunTrace run_sfla(const SflaConfig& config, const ChannelEnvironment& env,
                  const ModeWeights& weights, const GenerationObserver& observer);

}  // namespace crqos
