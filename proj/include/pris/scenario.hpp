// Scenario configuration for the perpetual-RIS simulator.
//
// A ScenarioConfig holds the full link/frame/hardware parameter set. Values are
// SI units throughout (Hz, W, m, s, J, K); gains and losses carry a _db / _dbi
// suffix. Configs are immutable after validation and can be shared freely
// between trial workers.

#ifndef PRIS_SCENARIO_HPP
#define PRIS_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pris {

/// UC indices, 0-based, row-major over the RIS grid.
using IndexSet = std::vector<std::size_t>;

inline constexpr double speed_of_light = 299792458.0;  // m/s
inline constexpr double boltzmann = 1.380649e-23;      // J/K

/// Thrown when a config file cannot be read or a line is malformed.
class ConfigParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a parsed value violates a constraint. field() names the key.
class ConfigValidationError : public std::invalid_argument {
public:
    ConfigValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

enum class RectifierKind { linear_clipped, sigmoidal };

/// Parametric RF->DC conversion curve.
///
/// linear_clipped: zero up to `sensitivity`, then `efficiency * p` until the
/// input reaches `saturation`, flat at `efficiency * saturation` above.
/// sigmoidal: logistic curve with plateau `p_max`, slope `steepness` and
/// midpoint `center`, shifted and rescaled so that zero input gives zero output.
///
/// The defaults are generic Schottky-rectenna figures (30 %, -20 dBm, +10 dBm),
/// not measured values from any specific circuit.
struct RectifierModel {
    RectifierKind kind = RectifierKind::linear_clipped;
    double efficiency = 0.3;
    double sensitivity = 1e-5;  // W (-20 dBm)
    double saturation = 1e-2;   // W (+10 dBm)
    double p_max = 0.024;       // W
    double steepness = 150.0;   // 1/W
    double center = 0.014;      // W

    bool operator==(const RectifierModel&) const = default;
};

enum class ReconfigCountingMode { per_uc, per_asic };
enum class StaticPowerInterpretation { total, per_asic };

struct ScenarioConfig {
    double carrier_frequency = 28e9;
    double bandwidth = 200e6;
    double tx_power = 1.0;
    double tx_gain_dbi = 37.0;
    double rx_gain_dbi = 24.0;
    double antenna_efficiency = 0.9;
    double d_tx_ris = 18.0;
    double d_ris_rx = 38.0;
    double noise_figure_db = 10.0;
    double noise_temperature = 290.0;
    std::uint32_t ris_cols = 15;
    std::uint32_t ris_rows = 15;
    double rician_k = 10.0;  // linear ratio, not dB
    double slot_duration = 2e-6;
    std::uint64_t preamble_slots = 1000;
    std::uint64_t frame_slots = 10000;
    double e_rec = 8e-9;
    std::uint32_t asic_fanout = 4;
    ReconfigCountingMode reconfig_counting_mode = ReconfigCountingMode::per_uc;
    StaticPowerInterpretation static_power_interpretation = StaticPowerInterpretation::total;
    std::uint32_t chain_size = 9;
    double rf_combining_loss_db = 0.0;
    double dc_combining_efficiency = 1.0;
    RectifierModel rectifier{};
    std::uint64_t mc_trials = 10000;
    std::uint64_t rng_seed = 1;

    std::size_t num_ucs() const noexcept {
        return static_cast<std::size_t>(ris_cols) * ris_rows;
    }

    bool operator==(const ScenarioConfig&) const = default;
};

struct DerivedQuantities {
    double wavelength;      // m
    std::size_t m_s;        // UC count
    std::size_t n_asics;
    double noise_power;     // W
    double frame_duration;  // s
};

/// Throws ConfigValidationError naming the first offending field.
void validate(const ScenarioConfig& cfg);

DerivedQuantities derived_quantities(const ScenarioConfig& cfg);

/// Parses the `key = value` format. Unknown keys, duplicate keys and
/// unparsable values raise ConfigParseError; the result is validated.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Writes every key so that parse_config(write_config(cfg)) == cfg.
void write_config(std::ostream& out, const ScenarioConfig& cfg);

/// Applies a single `key`/`value` pair; used by the parser and CLI overrides.
void set_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value);

std::string to_string(RectifierKind kind);
std::string to_string(ReconfigCountingMode mode);
std::string to_string(StaticPowerInterpretation interp);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

}  // namespace pris

#endif  // PRIS_SCENARIO_HPP
