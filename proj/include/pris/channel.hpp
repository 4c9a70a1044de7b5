// Cascaded TX -> RIS -> RX channel.
//
// The TX-RIS hop is deterministic free space under far-field plane-wave
// incidence, so every UC sees the same |h|^2. The RIS-RX hop is Rician with a
// line-of-sight phase shared by all UCs within one draw and i.i.d. diffuse
// parts. Each UC is a half-wavelength square cell with aperture (lambda/2)^2.

#ifndef PRIS_CHANNEL_HPP
#define PRIS_CHANNEL_HPP

#include "pris/scenario.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace pris {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

struct CascadedChannel {
    std::vector<Complex> h;  // TX -> UC
    std::vector<Complex> g;  // UC -> RX
    double mean_g_power = 0.0;

    std::size_t size() const noexcept { return h.size(); }
};

double uc_aperture(const ScenarioConfig& cfg);
double uc_gain(const ScenarioConfig& cfg);

/// |h|^2: fraction of transmit power absorbed by one perfectly absorbing UC.
double free_space_uc_gain(const ScenarioConfig& cfg);

/// E[|g|^2] of the UC -> RX hop.
double mean_ris_rx_gain(const ScenarioConfig& cfg);

/// E[|g|] for a Rician law with linear factor k and E[|g|^2] = omega.
double rician_mean_amplitude(double k, double omega);

/// Generator for trial `trial` of a run seeded with `master_seed`.
Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial);

CascadedChannel sample_channel(const ScenarioConfig& cfg, Rng& rng);

/// Coherent-combining SNR with perfect per-UC phase alignment over the given
/// UC indices (0-based, row-major).
double reflected_snr(const CascadedChannel& ch, std::span<const std::size_t> reflecting,
                     const ScenarioConfig& cfg);

/// SNR with every UC reflecting.
double reflected_snr_all(const CascadedChannel& ch, const ScenarioConfig& cfg);

/// P_t |h_i|^2 for every UC.
std::vector<double> absorbed_power_per_uc(const CascadedChannel& ch, const ScenarioConfig& cfg);

}  // namespace pris

#endif  // PRIS_CHANNEL_HPP
