// Static-power sweep and its CSV schema.
//
// Header (exact):
//   p_static_w,protocol,status,optimal_allocation,avg_rate_bps,rate_ci_bps,p_dyn_w,dyn_over_static
// Reals use the shortest round-trip decimal form. dyn_over_static is empty
// when the static power is zero.

#ifndef PRIS_SWEEP_HPP
#define PRIS_SWEEP_HPP

#include "pris/optimizer.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pris {

inline constexpr const char* sweep_csv_header =
    "p_static_w,protocol,status,optimal_allocation,avg_rate_bps,rate_ci_bps,p_dyn_w,dyn_over_static";

class SweepCsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GridScale { linear, log };

struct SweepSpec {
    double start = 1e-7;
    double stop = 1e-3;
    std::size_t points = 25;
    GridScale scale = GridScale::log;
};

struct SweepRow {
    double p_static = 0.0;
    Protocol protocol = Protocol::time_splitting;
    AllocationStatus status = AllocationStatus::infeasible;
    std::uint64_t optimal_allocation = 0;
    double average_rate = 0.0;
    double rate_ci = 0.0;
    double p_dynamic = 0.0;
    std::optional<double> dyn_over_static;

    bool operator==(const SweepRow&) const = default;
};

GridScale parse_scale(const std::string& text);

/// Throws std::invalid_argument unless start < stop, points >= 2 and, for log
/// scale, start > 0.
std::vector<double> make_grid(const SweepSpec& spec);

SweepRow to_row(double p_static, const AllocationResult& result);

/// One row per (grid point, protocol), sorted by (p_static, protocol). All
/// grid points share one ChannelEnsemble built from cfg.rng_seed.
std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg, const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

struct ProtocolSummary {
    Protocol protocol;
    std::optional<double> feasibility_threshold;  // largest feasible p_static
    std::optional<double> max_average_rate;
};

struct RateGap {
    double p_static;
    double gap;  // UC-splitting minus time-splitting, bit/s
};

struct SweepSummary {
    std::vector<ProtocolSummary> protocols;
    std::vector<RateGap> gaps;  // common feasible points
    bool any_feasible = false;
};

SweepSummary summarize(const std::vector<SweepRow>& rows);
void print_summary(std::ostream& out, const SweepSummary& summary);

}  // namespace pris

#endif  // PRIS_SWEEP_HPP
