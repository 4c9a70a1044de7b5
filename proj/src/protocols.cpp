#include "pris/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pris {

namespace {

double shannon_rate(double fraction, double snr, const ScenarioConfig& cfg) {
    return fraction * cfg.bandwidth * std::log2(1.0 + snr);
}

FrameEnergyReport close_frame(double rate, double snr, double harvested, Protocol protocol, double p_static,
                              const ScenarioConfig& cfg) {
    const auto consumption = total_consumption(p_static, protocol, cfg);
    FrameEnergyReport r;
    r.rate = rate;
    r.snr = snr;
    r.harvested_energy = harvested;
    r.consumed_energy = consumption.total() * consumption.frame_duration;
    r.feasible = r.harvested_energy >= r.consumed_energy;
    return r;
}

}  // namespace

Allocation Allocation::time_splitting(std::uint64_t eh_slots) {
    Allocation a;
    a.protocol = Protocol::time_splitting;
    a.eh_slots = eh_slots;
    return a;
}

Allocation Allocation::uc_splitting(std::size_t k, const ScenarioConfig& cfg) {
    Allocation a;
    a.protocol = Protocol::uc_splitting;
    a.k_harvest_ucs = k;
    a.harvest_set = select_harvest_set(k, cfg);
    return a;
}

std::uint64_t post_preamble_slots(const ScenarioConfig& cfg) {
    return cfg.frame_slots - cfg.preamble_slots;
}

IndexSet select_harvest_set(std::size_t k, const ScenarioConfig& cfg) {
    if (k > cfg.num_ucs()) throw std::out_of_range("select_harvest_set: k exceeds the UC count");
    IndexSet set(k);
    std::iota(set.begin(), set.end(), std::size_t{0});
    return set;
}

FrameEnergyReport run_frame_time_splitting(const CascadedChannel& ch, const Allocation& alloc, double p_static,
                                           const ScenarioConfig& cfg) {
    if (alloc.protocol != Protocol::time_splitting) {
        throw std::invalid_argument("run_frame_time_splitting: allocation is not time-splitting");
    }
    const auto available = post_preamble_slots(cfg);
    if (alloc.eh_slots > available) throw std::out_of_range("run_frame_time_splitting: eh_slots exceeds post-preamble slots");

    const auto payload_slots = available - alloc.eh_slots;
    const double fraction = static_cast<double>(payload_slots) / static_cast<double>(cfg.frame_slots);
    const double snr = reflected_snr_all(ch, cfg);
    const double rate = payload_slots == 0 ? 0.0 : shannon_rate(fraction, snr, cfg);

    const auto absorbed = absorbed_power_per_uc(ch, cfg);
    const double duration = static_cast<double>(alloc.eh_slots) * cfg.slot_duration;
    const double harvested = harvest(absorbed, duration, cfg).harvested_energy;
    return close_frame(rate, snr, harvested, Protocol::time_splitting, p_static, cfg);
}

FrameEnergyReport run_frame_uc_splitting(const CascadedChannel& ch, const Allocation& alloc, double p_static,
                                         const ScenarioConfig& cfg) {
    if (alloc.protocol != Protocol::uc_splitting) {
        throw std::invalid_argument("run_frame_uc_splitting: allocation is not UC-splitting");
    }
    const std::size_t m_s = ch.size();
    if (alloc.k_harvest_ucs > m_s) throw std::out_of_range("run_frame_uc_splitting: k exceeds the UC count");
    if (alloc.harvest_set.size() != alloc.k_harvest_ucs) {
        throw std::out_of_range("run_frame_uc_splitting: harvest set size differs from k");
    }

    std::vector<bool> absorbing(m_s, false);
    for (const std::size_t i : alloc.harvest_set) {
        if (i >= m_s) throw std::out_of_range("run_frame_uc_splitting: UC index out of range");
        if (absorbing[i]) throw std::out_of_range("run_frame_uc_splitting: duplicate UC in harvest set");
        absorbing[i] = true;
    }
    IndexSet reflecting;
    reflecting.reserve(m_s - alloc.k_harvest_ucs);
    for (std::size_t i = 0; i < m_s; ++i) {
        if (!absorbing[i]) reflecting.push_back(i);
    }

    const auto available = post_preamble_slots(cfg);
    const double fraction = static_cast<double>(available) / static_cast<double>(cfg.frame_slots);
    const double snr = reflected_snr(ch, reflecting, cfg);
    const double rate = shannon_rate(fraction, snr, cfg);

    const auto all_absorbed = absorbed_power_per_uc(ch, cfg);
    IndexSet ordered = alloc.harvest_set;
    std::sort(ordered.begin(), ordered.end());
    std::vector<double> absorbed;
    absorbed.reserve(ordered.size());
    for (const std::size_t i : ordered) absorbed.push_back(all_absorbed[i]);
    const double duration = static_cast<double>(available) * cfg.slot_duration;
    const double harvested = harvest(absorbed, duration, cfg).harvested_energy;
    return close_frame(rate, snr, harvested, Protocol::uc_splitting, p_static, cfg);
}

FrameEnergyReport run_frame(const CascadedChannel& ch, const Allocation& alloc, double p_static,
                            const ScenarioConfig& cfg) {
    return alloc.protocol == Protocol::time_splitting ? run_frame_time_splitting(ch, alloc, p_static, cfg)
                                                      : run_frame_uc_splitting(ch, alloc, p_static, cfg);
}

}  // namespace pris
