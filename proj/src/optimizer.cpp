#include "pris/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace pris {

ChannelEnsemble::ChannelEnsemble(const ScenarioConfig& cfg, std::uint64_t seed) : seed_(seed) {
    draws_.reserve(cfg.mc_trials);
    for (std::uint64_t t = 0; t < cfg.mc_trials; ++t) {
        auto rng = trial_rng(seed, t);
        draws_.push_back(sample_channel(cfg, rng));
    }
}

std::string to_string(AllocationStatus s) {
    return s == AllocationStatus::feasible ? "feasible" : "infeasible";
}

std::uint64_t max_allocation(Protocol protocol, const ScenarioConfig& cfg) {
    return protocol == Protocol::time_splitting ? post_preamble_slots(cfg) : cfg.num_ucs();
}

Allocation make_allocation(Protocol protocol, std::uint64_t value, const ScenarioConfig& cfg) {
    if (value > max_allocation(protocol, cfg)) throw std::out_of_range("allocation value out of range");
    return protocol == Protocol::time_splitting ? Allocation::time_splitting(value)
                                                : Allocation::uc_splitting(value, cfg);
}

AverageEstimate estimate_averages(Protocol protocol, std::uint64_t value, double p_static,
                                  const ScenarioConfig& cfg, const ChannelEnsemble& ensemble) {
    if (ensemble.size() == 0) throw std::invalid_argument("estimate_averages: empty ensemble");
    const auto alloc = make_allocation(protocol, value, cfg);

    // Welford accumulation of the rate for the confidence interval.
    double mean = 0.0;
    double m2 = 0.0;
    double energy = 0.0;
    std::size_t n = 0;
    for (const auto& ch : ensemble.draws()) {
        const auto frame = run_frame(ch, alloc, p_static, cfg);
        ++n;
        const double delta = frame.rate - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (frame.rate - mean);
        energy += frame.harvested_energy;
    }

    AverageEstimate est;
    est.avg_rate = mean;
    if (n > 1) {
        const double variance = m2 / static_cast<double>(n - 1);
        est.rate_ci_halfwidth = 1.96 * std::sqrt(variance / static_cast<double>(n));
    }
    est.avg_harvest_energy = energy / static_cast<double>(n);
    est.avg_harvest_power = est.avg_harvest_energy / derived_quantities(cfg).frame_duration;
    return est;
}

AverageEstimate estimate_averages(Protocol protocol, std::uint64_t value, double p_static,
                                  const ScenarioConfig& cfg, std::uint64_t seed) {
    return estimate_averages(protocol, value, p_static, cfg, ChannelEnsemble(cfg, seed));
}

bool is_feasible(const AverageEstimate& est, double p_static, Protocol protocol, const ScenarioConfig& cfg) {
    const auto c = total_consumption(p_static, protocol, cfg);
    return est.avg_harvest_energy >= c.total() * c.frame_duration;
}

AllocationResult optimize(Protocol protocol, double p_static, const ScenarioConfig& cfg,
                          const ChannelEnsemble& ensemble) {
    const auto upper = max_allocation(protocol, cfg);
    auto feasible_at = [&](std::uint64_t v) {
        return is_feasible(estimate_averages(protocol, v, p_static, cfg, ensemble), p_static, protocol, cfg);
    };

    std::uint64_t chosen = upper;
    bool feasible = false;
    if (feasible_at(0)) {
        chosen = 0;
        feasible = true;
    } else if (feasible_at(upper)) {
        // Invariant: lo infeasible, hi feasible.
        std::uint64_t lo = 0;
        std::uint64_t hi = upper;
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (feasible_at(mid)) hi = mid;
            else lo = mid;
        }
        chosen = hi;
        feasible = true;
    }

    const auto est = estimate_averages(protocol, chosen, p_static, cfg, ensemble);
    AllocationResult r;
    r.protocol = protocol;
    r.optimal_value = chosen;
    if (protocol == Protocol::uc_splitting) r.harvest_set = select_harvest_set(chosen, cfg);
    r.average_rate = est.avg_rate;
    r.rate_ci_halfwidth = est.rate_ci_halfwidth;
    r.avg_harvested_power = est.avg_harvest_power;
    r.consumption = total_consumption(p_static, protocol, cfg);
    r.avg_consumed_power = r.consumption.total();
    r.status = feasible ? AllocationStatus::feasible : AllocationStatus::infeasible;
    return r;
}

AllocationResult optimize_time_splitting(double p_static, const ScenarioConfig& cfg, const ChannelEnsemble& ensemble) {
    return optimize(Protocol::time_splitting, p_static, cfg, ensemble);
}

AllocationResult optimize_uc_splitting(double p_static, const ScenarioConfig& cfg, const ChannelEnsemble& ensemble) {
    return optimize(Protocol::uc_splitting, p_static, cfg, ensemble);
}

AllocationResult optimize_time_splitting(double p_static, const ScenarioConfig& cfg, std::uint64_t seed) {
    return optimize_time_splitting(p_static, cfg, ChannelEnsemble(cfg, seed));
}

AllocationResult optimize_uc_splitting(double p_static, const ScenarioConfig& cfg, std::uint64_t seed) {
    return optimize_uc_splitting(p_static, cfg, ChannelEnsemble(cfg, seed));
}

}  // namespace pris
