#include "pris/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pris {

double uc_aperture(const ScenarioConfig& cfg) {
    const double half = derived_quantities(cfg).wavelength / 2.0;
    return half * half;
}

double uc_gain(const ScenarioConfig& cfg) {
    const double lambda = derived_quantities(cfg).wavelength;
    return 4.0 * std::numbers::pi * uc_aperture(cfg) / (lambda * lambda);
}

double free_space_uc_gain(const ScenarioConfig& cfg) {
    const double g_t = std::pow(10.0, cfg.tx_gain_dbi / 10.0);
    return g_t * cfg.antenna_efficiency * uc_aperture(cfg) /
           (4.0 * std::numbers::pi * cfg.d_tx_ris * cfg.d_tx_ris);
}

double mean_ris_rx_gain(const ScenarioConfig& cfg) {
    const double lambda = derived_quantities(cfg).wavelength;
    const double g_r = std::pow(10.0, cfg.rx_gain_dbi / 10.0);
    const double friis = lambda / (4.0 * std::numbers::pi * cfg.d_ris_rx);
    return uc_gain(cfg) * g_r * cfg.antenna_efficiency * friis * friis;
}

double rician_mean_amplitude(double k, double omega) {
    if (k < 0.0 || omega <= 0.0) throw std::domain_error("rician_mean_amplitude: k >= 0, omega > 0 required");
    // E|g| = sqrt(pi omega / (4 (k+1))) * L_{1/2}(-k), with
    // L_{1/2}(-k) = e^{-k/2} [(1+k) I0(k/2) + k I1(k/2)].
    // For large k the scaled Bessel product is evaluated asymptotically.
    if (std::isinf(k)) return std::sqrt(omega);
    const double scale = std::sqrt(std::numbers::pi * omega / (4.0 * (k + 1.0)));
    double laguerre;
    if (k < 500.0) {
        const double x = k / 2.0;
        laguerre = std::exp(-x) * ((1.0 + k) * std::cyl_bessel_i(0.0, x) + k * std::cyl_bessel_i(1.0, x));
    } else {
        // e^{-x} I_nu(x) ~ (1 - (4nu^2-1)/(8x) + (4nu^2-1)(4nu^2-9)/(2!(8x)^2)) / sqrt(2 pi x)
        const double x = k / 2.0;
        const double inv = 1.0 / (8.0 * x);
        const double i0 = (1.0 + inv + 9.0 / 2.0 * inv * inv) / std::sqrt(2.0 * std::numbers::pi * x);
        const double i1 = (1.0 - 3.0 * inv - 15.0 / 2.0 * inv * inv) / std::sqrt(2.0 * std::numbers::pi * x);
        laguerre = (1.0 + k) * i0 + k * i1;
    }
    return scale * laguerre;
}

Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

CascadedChannel sample_channel(const ScenarioConfig& cfg, Rng& rng) {
    const std::size_t m_s = cfg.num_ucs();
    const double omega = mean_ris_rx_gain(cfg);
    const double k = cfg.rician_k;
    const bool los_only = std::isinf(k);
    const double los_amp = los_only ? std::sqrt(omega) : std::sqrt(omega * k / (k + 1.0));
    // CN(0,1) has per-component variance 1/2.
    const double diffuse_sigma = los_only ? 0.0 : std::sqrt(omega / (k + 1.0) / 2.0);

    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> normal(0.0, 1.0);

    CascadedChannel ch;
    ch.mean_g_power = omega;
    ch.h.assign(m_s, Complex(std::sqrt(free_space_uc_gain(cfg)), 0.0));
    ch.g.resize(m_s);

    const Complex los = std::polar(los_amp, phase(rng));
    for (auto& gi : ch.g) {
        const double re = normal(rng);
        const double im = normal(rng);
        gi = los + diffuse_sigma * Complex(re, im);
    }
    return ch;
}

double reflected_snr(const CascadedChannel& ch, std::span<const std::size_t> reflecting,
                     const ScenarioConfig& cfg) {
    double amplitude = 0.0;
    for (const std::size_t i : reflecting) {
        if (i >= ch.size()) throw std::out_of_range("reflected_snr: UC index out of range");
        amplitude += std::abs(ch.h[i]) * std::abs(ch.g[i]);
    }
    return cfg.tx_power * amplitude * amplitude / derived_quantities(cfg).noise_power;
}

double reflected_snr_all(const CascadedChannel& ch, const ScenarioConfig& cfg) {
    double amplitude = 0.0;
    for (std::size_t i = 0; i < ch.size(); ++i) amplitude += std::abs(ch.h[i]) * std::abs(ch.g[i]);
    return cfg.tx_power * amplitude * amplitude / derived_quantities(cfg).noise_power;
}

std::vector<double> absorbed_power_per_uc(const CascadedChannel& ch, const ScenarioConfig& cfg) {
    std::vector<double> out(ch.size());
    for (std::size_t i = 0; i < ch.size(); ++i) out[i] = cfg.tx_power * std::norm(ch.h[i]);
    return out;
}

}  // namespace pris
