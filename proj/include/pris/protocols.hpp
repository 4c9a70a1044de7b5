// Frame engines for the two post-preamble harvesting protocols.
//
// Frame layout: preamble (one-UC-at-a-time channel estimation, no payload, no
// harvesting) followed by the post-preamble interval.
//   time-splitting: eh_slots with every UC absorbing, then payload with every
//     UC reflecting. The rate loses a linear time factor.
//   UC-splitting: for the whole post-preamble interval, the harvest set
//     absorbs while the remaining UCs reflect. The rate loses array gain
//     inside the logarithm.

#ifndef PRIS_PROTOCOLS_HPP
#define PRIS_PROTOCOLS_HPP

#include "pris/channel.hpp"
#include "pris/harvesting.hpp"
#include "pris/power.hpp"

#include <cstdint>

namespace pris {

struct Allocation {
    Protocol protocol = Protocol::time_splitting;
    std::uint64_t eh_slots = 0;       // time-splitting
    std::size_t k_harvest_ucs = 0;    // UC-splitting
    IndexSet harvest_set;             // UC-splitting, |harvest_set| == k_harvest_ucs

    static Allocation time_splitting(std::uint64_t eh_slots);
    static Allocation uc_splitting(std::size_t k, const ScenarioConfig& cfg);
};

struct FrameEnergyReport {
    double rate = 0.0;              // bit/s
    double harvested_energy = 0.0;  // J
    double consumed_energy = 0.0;   // J
    bool feasible = false;
    double snr = 0.0;
};

std::uint64_t post_preamble_slots(const ScenarioConfig& cfg);

/// First k UCs in row-major order. All UCs are statistically identical, so the
/// choice depends only on k, never on a channel draw.
IndexSet select_harvest_set(std::size_t k, const ScenarioConfig& cfg);

/// Throws std::out_of_range on allocation bound violations and
/// std::invalid_argument on a protocol mismatch.
FrameEnergyReport run_frame_time_splitting(const CascadedChannel& ch, const Allocation& alloc, double p_static,
                                           const ScenarioConfig& cfg);
FrameEnergyReport run_frame_uc_splitting(const CascadedChannel& ch, const Allocation& alloc, double p_static,
                                         const ScenarioConfig& cfg);

FrameEnergyReport run_frame(const CascadedChannel& ch, const Allocation& alloc, double p_static,
                            const ScenarioConfig& cfg);

}  // namespace pris

#endif  // PRIS_PROTOCOLS_HPP
