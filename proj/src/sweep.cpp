#include "pris/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace pris {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double csv_real(const std::string& text, int line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw SweepCsvError("line " + std::to_string(line_no) + ": invalid number '" + text + "'");
    }
    return v;
}

std::uint64_t csv_count(const std::string& text, int line_no) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw SweepCsvError("line " + std::to_string(line_no) + ": invalid count '" + text + "'");
    }
    return v;
}

}  // namespace

GridScale parse_scale(const std::string& text) {
    if (text == "linear") return GridScale::linear;
    if (text == "log") return GridScale::log;
    throw std::invalid_argument("scale must be linear or log, got '" + text + "'");
}

std::vector<double> make_grid(const SweepSpec& spec) {
    if (!(spec.start < spec.stop)) throw std::invalid_argument("sweep start must be smaller than stop");
    if (spec.points < 2) throw std::invalid_argument("sweep needs at least 2 points");
    if (spec.start < 0.0) throw std::invalid_argument("static power cannot be negative");
    if (spec.scale == GridScale::log && !(spec.start > 0.0)) {
        throw std::invalid_argument("log-scale sweep needs a positive start");
    }
    std::vector<double> grid(spec.points);
    const double last = static_cast<double>(spec.points - 1);
    for (std::size_t i = 0; i < spec.points; ++i) {
        const double t = static_cast<double>(i) / last;
        grid[i] = spec.scale == GridScale::linear
                      ? spec.start + t * (spec.stop - spec.start)
                      : std::exp(std::log(spec.start) + t * (std::log(spec.stop) - std::log(spec.start)));
    }
    grid.front() = spec.start;
    grid.back() = spec.stop;
    return grid;
}

SweepRow to_row(double p_static, const AllocationResult& result) {
    SweepRow row;
    row.p_static = p_static;
    row.protocol = result.protocol;
    row.status = result.status;
    row.optimal_allocation = result.optimal_value;
    row.average_rate = result.average_rate;
    row.rate_ci = result.rate_ci_halfwidth;
    row.p_dynamic = result.consumption.p_dynamic;
    if (result.consumption.p_static > 0.0) {
        row.dyn_over_static = result.consumption.p_dynamic / result.consumption.p_static;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg, const SweepSpec& spec) {
    const auto grid = make_grid(spec);
    const ChannelEnsemble ensemble(cfg);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size() * 2);
    for (const double p : grid) {
        for (const auto protocol : {Protocol::time_splitting, Protocol::uc_splitting}) {
            rows.push_back(to_row(p, optimize(protocol, p, cfg, ensemble)));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.p_static != b.p_static) return a.p_static < b.p_static;
        return to_string(a.protocol) < to_string(b.protocol);
    });
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << sweep_csv_header << '\n';
    for (const auto& r : rows) {
        out << format_double(r.p_static) << ',' << to_string(r.protocol) << ',' << to_string(r.status) << ','
            << r.optimal_allocation << ',' << format_double(r.average_rate) << ',' << format_double(r.rate_ci) << ','
            << format_double(r.p_dynamic) << ',';
        if (r.dyn_over_static) out << format_double(*r.dyn_over_static);
        out << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw SweepCsvError("empty CSV: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != sweep_csv_header) throw SweepCsvError("unexpected CSV header: '" + line + "'");

    std::vector<SweepRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 8) {
            throw SweepCsvError("line " + std::to_string(line_no) + ": expected 8 fields, got " + std::to_string(f.size()));
        }
        SweepRow r;
        r.p_static = csv_real(f[0], line_no);
        try {
            r.protocol = parse_protocol(f[1]);
        } catch (const std::invalid_argument& e) {
            throw SweepCsvError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (f[2] == "feasible") r.status = AllocationStatus::feasible;
        else if (f[2] == "infeasible") r.status = AllocationStatus::infeasible;
        else throw SweepCsvError("line " + std::to_string(line_no) + ": unknown status '" + f[2] + "'");
        r.optimal_allocation = csv_count(f[3], line_no);
        r.average_rate = csv_real(f[4], line_no);
        r.rate_ci = csv_real(f[5], line_no);
        r.p_dynamic = csv_real(f[6], line_no);
        if (!f[7].empty()) r.dyn_over_static = csv_real(f[7], line_no);
        rows.push_back(r);
    }
    if (rows.empty()) throw SweepCsvError("CSV contains no data rows");
    return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
    SweepSummary s;
    std::map<double, std::map<Protocol, const SweepRow*>> by_point;
    for (const auto protocol : {Protocol::time_splitting, Protocol::uc_splitting}) {
        ProtocolSummary ps{protocol, std::nullopt, std::nullopt};
        for (const auto& r : rows) {
            if (r.protocol != protocol || r.status != AllocationStatus::feasible) continue;
            s.any_feasible = true;
            ps.feasibility_threshold = std::max(ps.feasibility_threshold.value_or(r.p_static), r.p_static);
            ps.max_average_rate = std::max(ps.max_average_rate.value_or(r.average_rate), r.average_rate);
        }
        s.protocols.push_back(ps);
    }
    for (const auto& r : rows) {
        if (r.status == AllocationStatus::feasible) by_point[r.p_static][r.protocol] = &r;
    }
    for (const auto& [p, entries] : by_point) {
        const auto ts = entries.find(Protocol::time_splitting);
        const auto uc = entries.find(Protocol::uc_splitting);
        if (ts != entries.end() && uc != entries.end()) {
            s.gaps.push_back({p, uc->second->average_rate - ts->second->average_rate});
        }
    }
    return s;
}

void print_summary(std::ostream& out, const SweepSummary& summary) {
    if (!summary.any_feasible) {
        out << "no feasible operating point\n";
        return;
    }
    for (const auto& ps : summary.protocols) {
        out << to_string(ps.protocol) << ":\n";
        if (!ps.feasibility_threshold) {
            out << "  no feasible operating point\n";
            continue;
        }
        out << "  feasibility threshold: " << format_double(*ps.feasibility_threshold) << " W\n";
        out << "  max average rate:      " << format_double(*ps.max_average_rate) << " bit/s\n";
    }
    out << "rate gap (uc_splitting - time_splitting) at common feasible points:\n";
    if (summary.gaps.empty()) out << "  none\n";
    for (const auto& g : summary.gaps) {
        out << "  p_static " << format_double(g.p_static) << " W: " << format_double(g.gap) << " bit/s\n";
    }
}

}  // namespace pris
