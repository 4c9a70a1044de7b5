// pris: static-power sweeps for a self-powered RIS.
//
//   pris sweep --config scenario.cfg --out sweep.csv [--sweep-start W]
//              [--sweep-stop W] [--points N] [--scale linear|log]
//              [--seed S] [--trials N]
//   pris summarize sweep.csv
//   pris defaults            # print the default scenario as a config file

#include "pris/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Perpetual RIS harvesting-protocol simulator"};
    app.require_subcommand(1);

    auto* sweep = app.add_subcommand("sweep", "Sweep ASIC static power and optimize both protocols");
    std::string config_path;
    std::string out_path;
    pris::SweepSpec spec;
    std::string scale = "log";
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    sweep->add_option("--config", config_path, "Scenario config file (key = value)")->check(CLI::ExistingFile);
    sweep->add_option("--sweep-start", spec.start, "First static power [W]")->capture_default_str();
    sweep->add_option("--sweep-stop", spec.stop, "Last static power [W]")->capture_default_str();
    sweep->add_option("--points", spec.points, "Grid points")->capture_default_str();
    sweep->add_option("--scale", scale, "Grid spacing")->check(CLI::IsMember({"linear", "log"}))->capture_default_str();
    sweep->add_option("--out", out_path, "Output CSV path")->required();
    auto* seed_opt = sweep->add_option("--seed", seed, "RNG seed (overrides rng_seed)");
    auto* trials_opt = sweep->add_option("--trials", trials, "Monte-Carlo trials (overrides mc_trials)");

    auto* summ = app.add_subcommand("summarize", "Report thresholds and rate gaps from a sweep CSV");
    std::string csv_path;
    summ->add_option("csv", csv_path, "CSV written by 'sweep'")->required();

    auto* defaults = app.add_subcommand("defaults", "Print the default scenario config");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            pris::ScenarioConfig cfg = config_path.empty() ? pris::ScenarioConfig{} : pris::load_config(config_path);
            if (*seed_opt) cfg.rng_seed = seed;
            if (*trials_opt) cfg.mc_trials = trials;
            pris::validate(cfg);
            spec.scale = pris::parse_scale(scale);

            const auto rows = pris::run_sweep(cfg, spec);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
            pris::write_sweep_csv(out, rows);
            out.close();
            if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
            std::cout << "wrote " << rows.size() << " rows to " << out_path << '\n';
        } else if (*summ) {
            std::ifstream in(csv_path);
            if (!in) throw std::runtime_error("cannot open '" + csv_path + "'");
            pris::print_summary(std::cout, pris::summarize(pris::read_sweep_csv(in)));
        } else if (*defaults) {
            pris::write_config(std::cout, pris::ScenarioConfig{});
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
