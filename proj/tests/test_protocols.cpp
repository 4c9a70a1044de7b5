#include "pris/protocols.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace pris;

namespace {

// 0.9 * 200e6 * log2(1 + SNR) with the line-of-sight closed-form SNR.
constexpr double los_rate_full = 2903238423.104712;
// Same with 112 of 225 UCs absorbing: SNR scaled by (113/225)^2.
constexpr double los_rate_half = 2545552362.4179463;

CascadedChannel draw(const ScenarioConfig& cfg, std::uint64_t seed) {
    auto rng = trial_rng(seed, 0);
    return sample_channel(cfg, rng);
}

ScenarioConfig los_config() {
    ScenarioConfig cfg;
    cfg.rician_k = std::numeric_limits<double>::infinity();
    return cfg;
}

}  // namespace

TEST_CASE("select_harvest_set") {
    ScenarioConfig cfg;
    CHECK(select_harvest_set(0, cfg).empty());
    CHECK(select_harvest_set(225, cfg).size() == 225);
    CHECK(select_harvest_set(5, cfg) == IndexSet{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(select_harvest_set(226, cfg), std::out_of_range);
}

TEST_CASE("time-splitting frame") {
    ScenarioConfig cfg;
    const auto ch = draw(cfg, 1);

    const auto all_eh = run_frame_time_splitting(ch, Allocation::time_splitting(9000), 0.0, cfg);
    CHECK(all_eh.rate == 0.0);
    const double max_harvest = all_eh.harvested_energy;
    CHECK(max_harvest > 0.0);

    const auto none = run_frame_time_splitting(ch, Allocation::time_splitting(0), 0.0, cfg);
    CHECK(none.harvested_energy == 0.0);
    CHECK(none.rate == doctest::Approx(0.9 * cfg.bandwidth * std::log2(1.0 + none.snr)).epsilon(1e-14));
    CHECK(none.consumed_energy == doctest::Approx(2.7e-4 * 0.02).epsilon(1e-13));
    CHECK_FALSE(none.feasible);

    CHECK_THROWS_AS(run_frame_time_splitting(ch, Allocation::time_splitting(9001), 0.0, cfg), std::out_of_range);
    CHECK_THROWS_AS(run_frame_time_splitting(ch, Allocation::uc_splitting(1, cfg), 0.0, cfg), std::invalid_argument);

    const auto los = los_config();
    const auto los_ch = draw(los, 2);
    CHECK(run_frame_time_splitting(los_ch, Allocation::time_splitting(0), 0.0, los).rate ==
          doctest::Approx(los_rate_full).epsilon(1e-10));
}

TEST_CASE("UC-splitting frame") {
    ScenarioConfig cfg;
    const auto ch = draw(cfg, 1);

    const auto none = run_frame_uc_splitting(ch, Allocation::uc_splitting(0, cfg), 0.0, cfg);
    const auto ts_none = run_frame_time_splitting(ch, Allocation::time_splitting(0), 0.0, cfg);
    CHECK(none.harvested_energy == 0.0);
    CHECK(none.rate == ts_none.rate);
    CHECK(none.snr == ts_none.snr);
    // The only difference at null allocation is 675 vs 450 reconfigurations.
    CHECK(ts_none.consumed_energy - none.consumed_energy ==
          doctest::Approx(225 * cfg.e_rec).epsilon(1e-12));

    const auto all = run_frame_uc_splitting(ch, Allocation::uc_splitting(225, cfg), 0.0, cfg);
    CHECK(all.rate == 0.0);
    const auto ts_all = run_frame_time_splitting(ch, Allocation::time_splitting(9000), 0.0, cfg);
    CHECK(all.harvested_energy == doctest::Approx(ts_all.harvested_energy).epsilon(1e-14));

    auto bad = Allocation::uc_splitting(3, cfg);
    bad.harvest_set.pop_back();
    CHECK_THROWS_AS(run_frame_uc_splitting(ch, bad, 0.0, cfg), std::out_of_range);
    auto dup = Allocation::uc_splitting(2, cfg);
    dup.harvest_set = {1, 1};
    CHECK_THROWS_AS(run_frame_uc_splitting(ch, dup, 0.0, cfg), std::out_of_range);

    const auto los = los_config();
    const auto los_ch = draw(los, 2);
    const auto half = run_frame_uc_splitting(los_ch, Allocation::uc_splitting(112, los), 0.0, los);
    CHECK(half.rate == doctest::Approx(los_rate_half).epsilon(1e-10));
}

TEST_CASE("feasibility flag matches an independent recomputation") {
    ScenarioConfig cfg;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint64_t> slots(0, 9000);
    std::uniform_int_distribution<std::size_t> ks(0, 225);
    std::uniform_real_distribution<double> log_p(-8.0, -2.0);
    for (int i = 0; i < 200; ++i) {
        const auto ch = draw(cfg, static_cast<std::uint64_t>(i));
        const double p_static = std::pow(10.0, log_p(rng));
        for (const auto& alloc : {Allocation::time_splitting(slots(rng)), Allocation::uc_splitting(ks(rng), cfg)}) {
            const auto r = run_frame(ch, alloc, p_static, cfg);
            const double consumed = (p_static + dynamic_power(alloc.protocol, cfg)) * 0.02;
            REQUIRE(r.consumed_energy == doctest::Approx(consumed).epsilon(1e-12));
            REQUIRE(r.feasible == (r.harvested_energy >= r.consumed_energy));
            REQUIRE(r.rate >= 0.0);
        }
    }
}

TEST_CASE("monotonicity in the allocated resource") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint32_t> side(2, 15);
    std::uniform_int_distribution<std::uint32_t> chain(1, 12);
    for (int i = 0; i < 1000; ++i) {
        ScenarioConfig cfg;
        cfg.ris_cols = side(rng);
        cfg.ris_rows = side(rng);
        cfg.chain_size = chain(rng);
        cfg.frame_slots = 200;
        cfg.preamble_slots = 20;
        if (i % 3 == 0) cfg.rectifier.kind = RectifierKind::sigmoidal;
        const auto ch = draw(cfg, static_cast<std::uint64_t>(1000 + i));

        std::uniform_int_distribution<std::uint64_t> slots(0, 179);
        const auto a = slots(rng);
        const auto ts_a = run_frame_time_splitting(ch, Allocation::time_splitting(a), 0.0, cfg);
        const auto ts_b = run_frame_time_splitting(ch, Allocation::time_splitting(a + 1), 0.0, cfg);
        REQUIRE(ts_b.rate < ts_a.rate);
        REQUIRE(ts_b.harvested_energy >= ts_a.harvested_energy);

        std::uniform_int_distribution<std::size_t> ks(0, cfg.num_ucs() - 1);
        const auto k = ks(rng);
        const auto uc_a = run_frame_uc_splitting(ch, Allocation::uc_splitting(k, cfg), 0.0, cfg);
        const auto uc_b = run_frame_uc_splitting(ch, Allocation::uc_splitting(k + 1, cfg), 0.0, cfg);
        REQUIRE(uc_b.rate <= uc_a.rate);
        REQUIRE(uc_b.harvested_energy >= uc_a.harvested_energy);
    }
}
