#include "pris/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace pris {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || std::isnan(value)) {
        throw ConfigParseError("invalid number for '" + key + "': '" + text + "'");
    }
    return value;
}

// Counts accept plain integers and integral scientific notation ("1e3").
std::uint64_t parse_count(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc{} && ptr == end) return value;
    const double real = parse_real(key, text);
    if (real < 0.0 || real != std::floor(real) ||
        real > static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
        throw ConfigParseError("invalid count for '" + key + "': '" + text + "'");
    }
    return static_cast<std::uint64_t>(real);
}

std::uint32_t parse_count32(const std::string& key, const std::string& text) {
    const auto v = parse_count(key, text);
    if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw ConfigParseError("count out of range for '" + key + "'");
    }
    return static_cast<std::uint32_t>(v);
}

struct Field {
    std::function<void(ScenarioConfig&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

template <class Member>
Field real_field(const char* name, Member member) {
    return {[name, member](ScenarioConfig& c, const std::string& v) {
                std::invoke(member, c) = parse_real(name, v);
            },
            [member](const ScenarioConfig& c) { return format_double(std::invoke(member, c)); }};
}

template <class Member>
Field count_field(const char* name, Member member) {
    return {[name, member](ScenarioConfig& c, const std::string& v) {
                auto& ref = std::invoke(member, c);
                if constexpr (sizeof(ref) == 4) {
                    ref = parse_count32(name, v);
                } else {
                    ref = parse_count(name, v);
                }
            },
            [member](const ScenarioConfig& c) { return std::to_string(std::invoke(member, c)); }};
}

// Ordered as written by write_config.
const std::vector<std::pair<std::string, Field>>& field_table() {
    static const std::vector<std::pair<std::string, Field>> table = [] {
        std::vector<std::pair<std::string, Field>> t;
        t.emplace_back("carrier_frequency", real_field("carrier_frequency", &ScenarioConfig::carrier_frequency));
        t.emplace_back("bandwidth", real_field("bandwidth", &ScenarioConfig::bandwidth));
        t.emplace_back("tx_power", real_field("tx_power", &ScenarioConfig::tx_power));
        t.emplace_back("tx_gain_dbi", real_field("tx_gain_dbi", &ScenarioConfig::tx_gain_dbi));
        t.emplace_back("rx_gain_dbi", real_field("rx_gain_dbi", &ScenarioConfig::rx_gain_dbi));
        t.emplace_back("antenna_efficiency", real_field("antenna_efficiency", &ScenarioConfig::antenna_efficiency));
        t.emplace_back("d_tx_ris", real_field("d_tx_ris", &ScenarioConfig::d_tx_ris));
        t.emplace_back("d_ris_rx", real_field("d_ris_rx", &ScenarioConfig::d_ris_rx));
        t.emplace_back("noise_figure_db", real_field("noise_figure_db", &ScenarioConfig::noise_figure_db));
        t.emplace_back("noise_temperature", real_field("noise_temperature", &ScenarioConfig::noise_temperature));
        t.emplace_back("ris_cols", count_field("ris_cols", &ScenarioConfig::ris_cols));
        t.emplace_back("ris_rows", count_field("ris_rows", &ScenarioConfig::ris_rows));
        t.emplace_back("rician_k", real_field("rician_k", &ScenarioConfig::rician_k));
        t.emplace_back("slot_duration", real_field("slot_duration", &ScenarioConfig::slot_duration));
        t.emplace_back("preamble_slots", count_field("preamble_slots", &ScenarioConfig::preamble_slots));
        t.emplace_back("frame_slots", count_field("frame_slots", &ScenarioConfig::frame_slots));
        t.emplace_back("e_rec", real_field("e_rec", &ScenarioConfig::e_rec));
        t.emplace_back("asic_fanout", count_field("asic_fanout", &ScenarioConfig::asic_fanout));
        t.emplace_back("reconfig_counting_mode",
                       Field{[](ScenarioConfig& c, const std::string& v) {
                                 if (v == "per_uc") c.reconfig_counting_mode = ReconfigCountingMode::per_uc;
                                 else if (v == "per_asic") c.reconfig_counting_mode = ReconfigCountingMode::per_asic;
                                 else throw ConfigParseError("reconfig_counting_mode must be per_uc or per_asic, got '" + v + "'");
                             },
                             [](const ScenarioConfig& c) { return to_string(c.reconfig_counting_mode); }});
        t.emplace_back("static_power_interpretation",
                       Field{[](ScenarioConfig& c, const std::string& v) {
                                 if (v == "total") c.static_power_interpretation = StaticPowerInterpretation::total;
                                 else if (v == "per_asic") c.static_power_interpretation = StaticPowerInterpretation::per_asic;
                                 else throw ConfigParseError("static_power_interpretation must be total or per_asic, got '" + v + "'");
                             },
                             [](const ScenarioConfig& c) { return to_string(c.static_power_interpretation); }});
        t.emplace_back("chain_size", count_field("chain_size", &ScenarioConfig::chain_size));
        t.emplace_back("rf_combining_loss_db", real_field("rf_combining_loss_db", &ScenarioConfig::rf_combining_loss_db));
        t.emplace_back("dc_combining_efficiency", real_field("dc_combining_efficiency", &ScenarioConfig::dc_combining_efficiency));
        t.emplace_back("rectifier_kind",
                       Field{[](ScenarioConfig& c, const std::string& v) {
                                 if (v == "linear_clipped") c.rectifier.kind = RectifierKind::linear_clipped;
                                 else if (v == "sigmoidal") c.rectifier.kind = RectifierKind::sigmoidal;
                                 else throw ConfigParseError("rectifier_kind must be linear_clipped or sigmoidal, got '" + v + "'");
                             },
                             [](const ScenarioConfig& c) { return to_string(c.rectifier.kind); }});
        auto rect = [](double RectifierModel::*m) {
            return [m](ScenarioConfig& c) -> double& { return c.rectifier.*m; };
        };
        auto rect_field = [&](const char* name, double RectifierModel::*m) {
            auto access = rect(m);
            return Field{[name, access](ScenarioConfig& c, const std::string& v) { access(c) = parse_real(name, v); },
                         [m](const ScenarioConfig& c) { return format_double(c.rectifier.*m); }};
        };
        t.emplace_back("rectifier_efficiency", rect_field("rectifier_efficiency", &RectifierModel::efficiency));
        t.emplace_back("rectifier_sensitivity", rect_field("rectifier_sensitivity", &RectifierModel::sensitivity));
        t.emplace_back("rectifier_saturation", rect_field("rectifier_saturation", &RectifierModel::saturation));
        t.emplace_back("rectifier_p_max", rect_field("rectifier_p_max", &RectifierModel::p_max));
        t.emplace_back("rectifier_steepness", rect_field("rectifier_steepness", &RectifierModel::steepness));
        t.emplace_back("rectifier_center", rect_field("rectifier_center", &RectifierModel::center));
        t.emplace_back("mc_trials", count_field("mc_trials", &ScenarioConfig::mc_trials));
        t.emplace_back("rng_seed", count_field("rng_seed", &ScenarioConfig::rng_seed));
        return t;
    }();
    return table;
}

void require_positive(const char* field, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigValidationError(field, "must be strictly positive");
}

void require_nonnegative(const char* field, double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigValidationError(field, "must be non-negative");
}

void require_efficiency(const char* field, double v) {
    if (!(v > 0.0 && v <= 1.0)) throw ConfigValidationError(field, "must lie in (0, 1]");
}

void require_finite(const char* field, double v) {
    if (!std::isfinite(v)) throw ConfigValidationError(field, "must be finite");
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string to_string(RectifierKind kind) {
    return kind == RectifierKind::linear_clipped ? "linear_clipped" : "sigmoidal";
}

std::string to_string(ReconfigCountingMode mode) {
    return mode == ReconfigCountingMode::per_uc ? "per_uc" : "per_asic";
}

std::string to_string(StaticPowerInterpretation interp) {
    return interp == StaticPowerInterpretation::total ? "total" : "per_asic";
}

void validate(const ScenarioConfig& cfg) {
    require_positive("carrier_frequency", cfg.carrier_frequency);
    require_positive("bandwidth", cfg.bandwidth);
    require_positive("tx_power", cfg.tx_power);
    require_finite("tx_gain_dbi", cfg.tx_gain_dbi);
    require_finite("rx_gain_dbi", cfg.rx_gain_dbi);
    require_efficiency("antenna_efficiency", cfg.antenna_efficiency);
    require_positive("d_tx_ris", cfg.d_tx_ris);
    require_positive("d_ris_rx", cfg.d_ris_rx);
    require_finite("noise_figure_db", cfg.noise_figure_db);
    require_positive("noise_temperature", cfg.noise_temperature);
    if (cfg.ris_cols == 0) throw ConfigValidationError("ris_cols", "must be strictly positive");
    if (cfg.ris_rows == 0) throw ConfigValidationError("ris_rows", "must be strictly positive");
    // +inf is the pure line-of-sight limit.
    if (!(cfg.rician_k >= 0.0)) throw ConfigValidationError("rician_k", "must be non-negative");
    require_positive("slot_duration", cfg.slot_duration);
    if (cfg.preamble_slots == 0) throw ConfigValidationError("preamble_slots", "must be strictly positive");
    if (cfg.frame_slots == 0) throw ConfigValidationError("frame_slots", "must be strictly positive");
    if (cfg.preamble_slots >= cfg.frame_slots) {
        throw ConfigValidationError("preamble_slots", "must be smaller than frame_slots");
    }
    // Zero is allowed so that the dynamic term can be switched off.
    require_nonnegative("e_rec", cfg.e_rec);
    if (cfg.asic_fanout == 0) throw ConfigValidationError("asic_fanout", "must be strictly positive");
    if (cfg.chain_size == 0) throw ConfigValidationError("chain_size", "must be strictly positive");
    require_nonnegative("rf_combining_loss_db", cfg.rf_combining_loss_db);
    require_efficiency("dc_combining_efficiency", cfg.dc_combining_efficiency);

    const auto& r = cfg.rectifier;
    if (r.kind == RectifierKind::linear_clipped) {
        require_efficiency("rectifier_efficiency", r.efficiency);
        require_nonnegative("rectifier_sensitivity", r.sensitivity);
        require_positive("rectifier_saturation", r.saturation);
        if (r.saturation <= r.sensitivity) {
            throw ConfigValidationError("rectifier_saturation", "must exceed rectifier_sensitivity");
        }
    } else {
        require_positive("rectifier_p_max", r.p_max);
        require_positive("rectifier_steepness", r.steepness);
        require_finite("rectifier_center", r.center);
    }
    if (cfg.mc_trials == 0) throw ConfigValidationError("mc_trials", "must be strictly positive");
}

DerivedQuantities derived_quantities(const ScenarioConfig& cfg) {
    const std::size_t m_s = cfg.num_ucs();
    return DerivedQuantities{
        .wavelength = speed_of_light / cfg.carrier_frequency,
        .m_s = m_s,
        .n_asics = (m_s + cfg.asic_fanout - 1) / cfg.asic_fanout,
        .noise_power = boltzmann * cfg.noise_temperature * cfg.bandwidth *
                       std::pow(10.0, cfg.noise_figure_db / 10.0),
        .frame_duration = static_cast<double>(cfg.frame_slots) * cfg.slot_duration,
    };
}

void set_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    for (const auto& [name, field] : field_table()) {
        if (name == key) {
            field.set(cfg, value);
            return;
        }
    }
    throw ConfigParseError("unknown config key '" + key + "'");
}

ScenarioConfig parse_config(std::istream& in) {
    ScenarioConfig cfg;
    std::set<std::string> seen;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            throw ConfigParseError("line " + std::to_string(line_no) + ": empty key or value");
        }
        if (!seen.insert(key).second) {
            throw ConfigParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
        try {
            set_config_value(cfg, key, value);
        } catch (const ConfigParseError& e) {
            throw ConfigParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError("cannot open config file '" + path.string() + "'");
    return parse_config(in);
}

void write_config(std::ostream& out, const ScenarioConfig& cfg) {
    for (const auto& [name, field] : field_table()) {
        out << name << " = " << field.get(cfg) << '\n';
    }
}

}  // namespace pris
