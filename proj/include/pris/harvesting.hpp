// RF -> DC harvesting chain.
//
// Absorbing UCs are grouped into RF-combining chains of `chain_size`
// consecutive UCs (row-major order). Each chain feeds one rectifier; rectifier
// outputs are summed by a DC combining network with fixed efficiency.

#ifndef PRIS_HARVESTING_HPP
#define PRIS_HARVESTING_HPP

#include "pris/scenario.hpp"

#include <span>
#include <vector>

namespace pris {

struct HarvestReport {
    std::vector<double> per_chain_rf;  // W
    std::vector<double> per_chain_dc;  // W
    double total_dc_power = 0.0;       // W
    double harvested_energy = 0.0;     // J over the requested duration
};

/// Consecutive groups of `chain_size`; the last group may be shorter.
std::vector<IndexSet> partition_chains(std::span<const std::size_t> uc_indices, std::size_t chain_size);

/// Sum of member powers attenuated by `loss_db`.
double chain_rf_power(std::span<const double> absorbed, std::span<const std::size_t> chain, double loss_db);

/// Throws std::domain_error for negative input.
double rectify(double p_rf, const RectifierModel& model);

/// Upper bound of the rectifier output over all inputs.
double rectifier_ceiling(const RectifierModel& model);

/// `absorbed` holds the powers of the absorbing UCs, in row-major order.
HarvestReport harvest(std::span<const double> absorbed, double duration, const ScenarioConfig& cfg);

}  // namespace pris

#endif  // PRIS_HARVESTING_HPP
