#include "pris/power.hpp"

#include <stdexcept>

namespace pris {

std::string to_string(Protocol p) {
    return p == Protocol::time_splitting ? "time_splitting" : "uc_splitting";
}

Protocol parse_protocol(const std::string& text) {
    if (text == "time_splitting") return Protocol::time_splitting;
    if (text == "uc_splitting") return Protocol::uc_splitting;
    throw std::invalid_argument("unknown protocol '" + text + "'");
}

std::uint64_t reconfig_count(Protocol protocol, const ScenarioConfig& cfg) {
    const auto dq = derived_quantities(cfg);
    const std::uint64_t rounds = protocol == Protocol::time_splitting ? 2 : 1;
    const std::uint64_t per_round = cfg.reconfig_counting_mode == ReconfigCountingMode::per_uc ? dq.m_s : dq.n_asics;
    return dq.m_s + rounds * per_round;
}

double dynamic_power(Protocol protocol, const ScenarioConfig& cfg) {
    return static_cast<double>(reconfig_count(protocol, cfg)) * cfg.e_rec / derived_quantities(cfg).frame_duration;
}

ConsumptionBreakdown total_consumption(double p_static_input, Protocol protocol, const ScenarioConfig& cfg) {
    if (!(p_static_input >= 0.0)) throw std::invalid_argument("total_consumption: static power must be non-negative");
    const auto dq = derived_quantities(cfg);
    ConsumptionBreakdown b;
    b.p_static = cfg.static_power_interpretation == StaticPowerInterpretation::total
                     ? p_static_input
                     : p_static_input * static_cast<double>(dq.n_asics);
    b.reconfig_events_per_frame = reconfig_count(protocol, cfg);
    b.e_rec = cfg.e_rec;
    b.frame_duration = dq.frame_duration;
    b.p_dynamic = static_cast<double>(b.reconfig_events_per_frame) * cfg.e_rec / dq.frame_duration;
    return b;
}

}  // namespace pris
