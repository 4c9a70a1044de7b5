#include "pris/harvesting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pris {

std::vector<IndexSet> partition_chains(std::span<const std::size_t> uc_indices, std::size_t chain_size) {
    if (chain_size == 0) throw std::invalid_argument("partition_chains: chain_size must be >= 1");
    std::vector<IndexSet> chains;
    chains.reserve((uc_indices.size() + chain_size - 1) / chain_size);
    for (std::size_t start = 0; start < uc_indices.size(); start += chain_size) {
        const auto len = std::min(chain_size, uc_indices.size() - start);
        const auto group = uc_indices.subspan(start, len);
        chains.emplace_back(group.begin(), group.end());
    }
    return chains;
}

double chain_rf_power(std::span<const double> absorbed, std::span<const std::size_t> chain, double loss_db) {
    double sum = 0.0;
    for (const std::size_t i : chain) {
        if (i >= absorbed.size()) throw std::out_of_range("chain_rf_power: UC index out of range");
        sum += absorbed[i];
    }
    return sum * std::pow(10.0, -loss_db / 10.0);
}

double rectify(double p_rf, const RectifierModel& model) {
    if (p_rf < 0.0 || std::isnan(p_rf)) throw std::domain_error("rectify: input power must be non-negative");
    switch (model.kind) {
    case RectifierKind::linear_clipped:
        if (p_rf <= model.sensitivity) return 0.0;
        return model.efficiency * std::min(p_rf, model.saturation);
    case RectifierKind::sigmoidal: {
        // Logistic curve shifted to pass through the origin, rescaled to keep
        // its plateau at p_max.
        const double offset = 1.0 / (1.0 + std::exp(model.steepness * model.center));
        const double logistic = 1.0 / (1.0 + std::exp(-model.steepness * (p_rf - model.center)));
        return std::max(0.0, model.p_max * (logistic - offset) / (1.0 - offset));
    }
    }
    return 0.0;
}

double rectifier_ceiling(const RectifierModel& model) {
    return model.kind == RectifierKind::linear_clipped ? model.efficiency * model.saturation : model.p_max;
}

HarvestReport harvest(std::span<const double> absorbed, double duration, const ScenarioConfig& cfg) {
    if (duration < 0.0) throw std::invalid_argument("harvest: duration must be non-negative");
    IndexSet positions(absorbed.size());
    std::iota(positions.begin(), positions.end(), std::size_t{0});

    HarvestReport report;
    for (const auto& chain : partition_chains(positions, cfg.chain_size)) {
        const double rf = chain_rf_power(absorbed, chain, cfg.rf_combining_loss_db);
        report.per_chain_rf.push_back(rf);
        report.per_chain_dc.push_back(rectify(rf, cfg.rectifier));
    }
    report.total_dc_power = cfg.dc_combining_efficiency *
                            std::accumulate(report.per_chain_dc.begin(), report.per_chain_dc.end(), 0.0);
    report.harvested_energy = report.total_dc_power * duration;
    return report;
}

}  // namespace pris
