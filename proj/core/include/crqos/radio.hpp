#pragma once

#include <cstddef>
#include <vector>

#include "crqos/rng.hpp"

namespace crqos {

// Codebook bounds. 94 power levels spanning the U-NII-band power budget,
// 11 modulation levels from BPSK up to 1024QAM.
inline constexpr int kPowerCodeMax = 93;
inline constexpr int kModulationCodeMin = 1;
inline constexpr int kModulationCodeMax = 11;
inline constexpr double kPowerMinMw = 0.1;
inline constexpr double kPowerMaxMw = 2.4808;
inline constexpr int kMaxConstellation = 1024;

/// Index into the transmit-power codebook. Valid range [0, 93].
class PowerCode {
  public:
    explicit PowerCode(int code);
    int value() const { return code_; }
    friend bool operator==(PowerCode a, PowerCode b) { return a.code_ == b.code_; }

  private:
    int code_;
};

/// Index into the modulation codebook. Valid range [1, 11];
/// 1 is BPSK, c >= 2 is M-QAM with M = 2^(c-1).
class ModulationCode {
  public:
    explicit ModulationCode(int code);
    int value() const { return code_; }
    friend bool operator==(ModulationCode a, ModulationCode b) { return a.code_ == b.code_; }

  private:
    int code_;
};

enum class ModulationFamily { bpsk, mpsk, mqam };

/// A concrete constellation. M-PSK is constructible for BER evaluation but
/// never produced by codebook decoding.
class ModulationScheme {
  public:
    ModulationScheme(ModulationFamily family, int constellation);
    ModulationFamily family() const { return family_; }
    int constellation() const { return m_; }
    int bits_per_symbol() const;

  private:
    ModulationFamily family_;
    int m_;
};

/// One subcarrier's knob settings.
struct SubcarrierSetting {
    PowerCode power;
    ModulationCode modulation;
};

/// Candidate solution: per-subcarrier power and modulation codes.
struct TransmissionPlan {
    std::vector<SubcarrierSetting> settings;
    std::size_t size() const { return settings.size(); }
};

/// Fixed per-run channel state: attenuation per subcarrier in dB, plus the
/// derived linear noise term 10^(dB/10) used as the SNR denominator.
class ChannelEnvironment {
  public:
    explicit ChannelEnvironment(std::vector<double> atten_db);

    std::size_t size() const { return atten_db_.size(); }
    const std::vector<double>& atten_db() const { return atten_db_; }
    const std::vector<double>& noise_lin() const { return noise_lin_; }

  private:
    std::vector<double> atten_db_;
    std::vector<double> noise_lin_;
};

/// Power codebook: 94 uniformly spaced levels on [0.1, 2.4808] mW,
/// exact at both endpoints.
double decode_power(PowerCode code);

ModulationScheme decode_modulation(ModulationCode code);

/// Gaussian tail approximation e^(-x^2/2) / (1.64x + sqrt(0.7x^2 + 4)).
/// Defined for x >= 0, value in (0, 0.5].
double q_approx(double x);

/// Bit error probability of a scheme at linear SNR. M = 2 is evaluated with
/// the BPSK expression for any family (the QAM formula degenerates there).
/// Output clamped to [1e-300, 1) so downstream log10 stays finite.
double ber(const ModulationScheme& scheme, double snr);

/// Fast path used by the objective loop: BER straight from a modulation code.
double ber_for_code(ModulationCode code, double snr);

/// Linear SNR. The codebook power is in mW; noise_lin is the attenuation
/// factor 10^(dB/10) >= 1.
double snr(double power_mw, double noise_lin);

/// Draws per-subcarrier attenuation i.i.d. uniform on [0, 1] dB.
ChannelEnvironment sample_environment(std::size_t n, Rng& rng);

/// Plan with every code drawn uniformly from its codebook.
TransmissionPlan random_plan(std::size_t n, Rng& rng);

}  // namespace crqos
