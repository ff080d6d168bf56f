#include "crqos/radio.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace crqos {

namespace {

std::array<double, kPowerCodeMax + 1> make_power_table() {
    std::array<double, kPowerCodeMax + 1> table{};
    for (int c = 0; c <= kPowerCodeMax; ++c) {
        // Interpolation form keeps both endpoints exact.
        const double t = static_cast<double>(c) / kPowerCodeMax;
        table[c] = kPowerMinMw * (1.0 - t) + kPowerMaxMw * t;
    }
    return table;
}

const std::array<double, kPowerCodeMax + 1> kPowerTable = make_power_table();

// Per modulation code: QAM coefficient (4/k)(1 - 1/sqrt(M)) and the SNR
// multiplier 3k/(M-1) inside the Q argument. Codes 1 and 2 use BPSK.
struct QamCoefficients {
    double coefficient;
    double snr_scale;
};

std::array<QamCoefficients, kModulationCodeMax + 1> make_qam_table() {
    std::array<QamCoefficients, kModulationCodeMax + 1> table{};
    for (int c = 3; c <= kModulationCodeMax; ++c) {
        const int k = c - 1;
        const double m = static_cast<double>(1 << k);
        table[c].coefficient = 4.0 / k * (1.0 - 1.0 / std::sqrt(m));
        table[c].snr_scale = 3.0 * k / (m - 1.0);
    }
    return table;
}

const std::array<QamCoefficients, kModulationCodeMax + 1> kQamTable = make_qam_table();

double clamp_ber(double p) {
    if (p < 1e-300) return 1e-300;
    if (p >= 1.0) return std::nextafter(1.0, 0.0);
    return p;
}

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace

PowerCode::PowerCode(int code) : code_(code) {
    if (code < 0 || code > kPowerCodeMax)
        throw std::domain_error("power code out of range [0, 93]: " + std::to_string(code));
}

ModulationCode::ModulationCode(int code) : code_(code) {
    if (code < kModulationCodeMin || code > kModulationCodeMax)
        throw std::domain_error("modulation code out of range [1, 11]: " + std::to_string(code));
}

ModulationScheme::ModulationScheme(ModulationFamily family, int constellation)
    : family_(family), m_(constellation) {
    if (!is_power_of_two(m_) || m_ < 2)
        throw std::domain_error("constellation size must be a power of two >= 2, got " +
                                std::to_string(m_));
    if (m_ > kMaxConstellation)
        throw std::domain_error("constellation size exceeds 1024: " + std::to_string(m_));
    if (family_ == ModulationFamily::bpsk && m_ != 2)
        throw std::domain_error("BPSK has a fixed constellation of 2");
}

int ModulationScheme::bits_per_symbol() const {
    int bits = 0;
    for (int m = m_; m > 1; m >>= 1) ++bits;
    return bits;
}

ChannelEnvironment::ChannelEnvironment(std::vector<double> atten_db)
    : atten_db_(std::move(atten_db)) {
    if (atten_db_.empty()) throw std::domain_error("environment needs at least one subcarrier");
    noise_lin_.reserve(atten_db_.size());
    for (double db : atten_db_) {
        if (db < 0.0 || db > 1.0)
            throw std::domain_error("attenuation out of range [0, 1] dB: " + std::to_string(db));
        noise_lin_.push_back(std::pow(10.0, db / 10.0));
    }
}

double decode_power(PowerCode code) { return kPowerTable[code.value()]; }

ModulationScheme decode_modulation(ModulationCode code) {
    const int c = code.value();
    if (c == 1) return {ModulationFamily::bpsk, 2};
    return {ModulationFamily::mqam, 1 << (c - 1)};
}

double q_approx(double x) {
    if (x < 0.0) throw std::domain_error("q_approx requires x >= 0");
    return std::exp(-0.5 * x * x) / (1.64 * x + std::sqrt(0.7 * x * x + 4.0));
}

double ber_for_code(ModulationCode code, double snr_lin) {
    const int c = code.value();
    if (c <= 2) return clamp_ber(q_approx(std::sqrt(snr_lin)));  // BPSK and 2QAM
    const QamCoefficients& q = kQamTable[c];
    return clamp_ber(q.coefficient * q_approx(std::sqrt(q.snr_scale * snr_lin)));
}

double ber(const ModulationScheme& scheme, double snr_lin) {
    if (snr_lin <= 0.0) throw std::domain_error("ber requires snr > 0");
    const int m = scheme.constellation();
    if (m == 2)  // both 2QAM and 2PSK degenerate to BPSK
        return clamp_ber(q_approx(std::sqrt(snr_lin)));
    const double k = scheme.bits_per_symbol();
    switch (scheme.family()) {
        case ModulationFamily::bpsk:
            return clamp_ber(q_approx(std::sqrt(snr_lin)));
        case ModulationFamily::mpsk:
            return clamp_ber(2.0 / k *
                             q_approx(std::sqrt(2.0 * k * snr_lin) * std::sin(M_PI / m)));
        case ModulationFamily::mqam:
            return clamp_ber(4.0 / k * (1.0 - 1.0 / std::sqrt(static_cast<double>(m))) *
                             q_approx(std::sqrt(3.0 * k / (m - 1.0) * snr_lin)));
    }
    throw std::domain_error("unknown modulation family");
}

double snr(double power_mw, double noise_lin) {
    if (power_mw <= 0.0) throw std::domain_error("snr requires positive power");
    if (noise_lin < 1.0) throw std::domain_error("noise_lin below 1 (0 dB attenuation)");
    return power_mw / noise_lin;
}

ChannelEnvironment sample_environment(std::size_t n, Rng& rng) {
    if (n == 0) throw std::domain_error("environment needs at least one subcarrier");
    std::vector<double> atten(n);
    for (double& a : atten) a = rng.next_unit();
    return ChannelEnvironment(std::move(atten));
}

TransmissionPlan random_plan(std::size_t n, Rng& rng) {
    TransmissionPlan plan;
    plan.settings.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PowerCode p{rng.next_int(0, kPowerCodeMax)};
        ModulationCode m{rng.next_int(kModulationCodeMin, kModulationCodeMax)};
        plan.settings.push_back({p, m});
    }
    return plan;
}

}  // namespace crqos
