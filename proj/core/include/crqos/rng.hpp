#pragma once

#include <cstdint>
#include <random>

namespace crqos {

/// Deterministic random source used by every stochastic component.
///
/// Wraps std::mt19937_64 (fully specified by the standard, so streams are
/// bit-identical across platforms) and adds the two draw kinds the engines
/// need: unbiased bounded integers and doubles in [0, 1).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo bias.
    int next_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace crqos
