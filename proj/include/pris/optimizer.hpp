// Statistics-based resource allocation.
//
// Both problems maximize the Monte-Carlo average rate subject to average
// harvested power >= consumed power. Average rate is strictly decreasing and
// average harvest nondecreasing in the allocated resource, so the optimum is
// the smallest feasible value, located by integer bisection on the
// feasibility predicate.
//
// All candidate values in one optimization are scored on the same
// ChannelEnsemble (common random numbers), which keeps the sample-average
// predicate exactly monotone at finite trial counts.

#ifndef PRIS_OPTIMIZER_HPP
#define PRIS_OPTIMIZER_HPP

#include "pris/protocols.hpp"

#include <cstdint>
#include <vector>

namespace pris {

/// mc_trials channel draws; draw t comes from trial_rng(seed, t).
class ChannelEnsemble {
public:
    ChannelEnsemble(const ScenarioConfig& cfg, std::uint64_t seed);
    explicit ChannelEnsemble(const ScenarioConfig& cfg) : ChannelEnsemble(cfg, cfg.rng_seed) {}

    const std::vector<CascadedChannel>& draws() const noexcept { return draws_; }
    std::size_t size() const noexcept { return draws_.size(); }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::vector<CascadedChannel> draws_;
    std::uint64_t seed_;
};

struct AverageEstimate {
    double avg_rate = 0.0;           // bit/s
    double rate_ci_halfwidth = 0.0;  // 95 % normal approximation
    double avg_harvest_power = 0.0;  // W
    double avg_harvest_energy = 0.0; // J per frame
};

enum class AllocationStatus { feasible, infeasible };

std::string to_string(AllocationStatus s);

struct AllocationResult {
    Protocol protocol = Protocol::time_splitting;
    std::uint64_t optimal_value = 0;  // eh_slots or k
    IndexSet harvest_set;             // UC-splitting only
    double average_rate = 0.0;
    double rate_ci_halfwidth = 0.0;
    double avg_harvested_power = 0.0;
    double avg_consumed_power = 0.0;
    ConsumptionBreakdown consumption;
    AllocationStatus status = AllocationStatus::infeasible;
};

/// Largest admissible allocation value: post-preamble slots or M_s.
std::uint64_t max_allocation(Protocol protocol, const ScenarioConfig& cfg);

Allocation make_allocation(Protocol protocol, std::uint64_t value, const ScenarioConfig& cfg);

AverageEstimate estimate_averages(Protocol protocol, std::uint64_t value, double p_static,
                                  const ScenarioConfig& cfg, const ChannelEnsemble& ensemble);
AverageEstimate estimate_averages(Protocol protocol, std::uint64_t value, double p_static,
                                  const ScenarioConfig& cfg, std::uint64_t seed);

/// Average-constraint check for one allocation value.
bool is_feasible(const AverageEstimate& est, double p_static, Protocol protocol, const ScenarioConfig& cfg);

AllocationResult optimize(Protocol protocol, double p_static, const ScenarioConfig& cfg,
                          const ChannelEnsemble& ensemble);

AllocationResult optimize_time_splitting(double p_static, const ScenarioConfig& cfg, const ChannelEnsemble& ensemble);
AllocationResult optimize_uc_splitting(double p_static, const ScenarioConfig& cfg, const ChannelEnsemble& ensemble);
AllocationResult optimize_time_splitting(double p_static, const ScenarioConfig& cfg, std::uint64_t seed);
AllocationResult optimize_uc_splitting(double p_static, const ScenarioConfig& cfg, std::uint64_t seed);

}  // namespace pris

#endif  // PRIS_OPTIMIZER_HPP
