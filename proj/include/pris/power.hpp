// RIS power consumption: static ASIC draw plus a dynamic term from UC
// reconfigurations, P_dyn = N_rec * E_rec / T with a uniform per-event cost.

#ifndef PRIS_POWER_HPP
#define PRIS_POWER_HPP

#include "pris/scenario.hpp"

#include <cstdint>
#include <string>

namespace pris {

enum class Protocol { time_splitting, uc_splitting };

std::string to_string(Protocol p);
Protocol parse_protocol(const std::string& text);

struct ConsumptionBreakdown {
    double p_static = 0.0;   // W
    double p_dynamic = 0.0;  // W
    std::uint64_t reconfig_events_per_frame = 0;
    double e_rec = 0.0;           // J
    double frame_duration = 0.0;  // s

    double total() const noexcept { return p_static + p_dynamic; }
};

/// Reconfiguration events per frame.
///
/// per_uc counts every UC adjustment: M_s for one-UC-at-a-time channel
/// estimation, then M_s per post-preamble configuration (two for
/// time-splitting, one for UC-splitting). per_asic keeps the M_s estimation
/// events but charges each post-preamble round once per ASIC.
std::uint64_t reconfig_count(Protocol protocol, const ScenarioConfig& cfg);

double dynamic_power(Protocol protocol, const ScenarioConfig& cfg);

/// `p_static_input` is read as an aggregate or a per-ASIC figure depending on
/// cfg.static_power_interpretation.
ConsumptionBreakdown total_consumption(double p_static_input, Protocol protocol, const ScenarioConfig& cfg);

}  // namespace pris

#endif  // PRIS_POWER_HPP
