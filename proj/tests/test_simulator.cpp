#include <doctest.h>

#include <cmath>

#include "pf/construction.hpp"
#include "pf/simulator.hpp"

using namespace pf;

namespace {

CodeConfig test_code(int m, uint32_t k) {
    DesignSpec spec;
    spec.m = m;
    spec.k = k;
    spec.channel = ChannelModel::awgn(2.0, (double)k / (1u << m));
    CodeConfig cfg;
    cfg.m = m;
    cfg.info_set = construct_reliability(spec).indices;
    return cfg;
}

}  // namespace

TEST_CASE("rng determinism and mix_seed separation") {
    Rng a(42), b(42), c(43);
    for (int t = 0; t < 100; ++t) {
        uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
    }
    CHECK(a.next_u64() != c.next_u64());
    CHECK(mix_seed(1, 2, 3) != mix_seed(1, 2, 4));
    CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 3));
    CHECK(mix_seed(1, 2, 3) != mix_seed(2, 2, 3));
    CHECK(mix_seed(1, 2, 3) == mix_seed(1, 2, 3));
}

TEST_CASE("gaussian sampler moments") {
    Rng rng(7);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int t = 0; t < n; ++t) {
        double g = rng.next_gauss();
        sum += g;
        sum2 += g * g;
    }
    CHECK(sum / n == doctest::Approx(0.0).epsilon(0.02));
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("awgn_transmit: determinism, mean LLR, low-noise limit") {
    std::vector<uint8_t> cw(256, 0);
    for (size_t i = 0; i < cw.size(); i += 3) cw[i] = 1;
    double sigma = 0.8;
    auto l1 = awgn_transmit(cw, sigma, 555);
    auto l2 = awgn_transmit(cw, sigma, 555);
    CHECK(l1 == l2);
    auto l3 = awgn_transmit(cw, sigma, 556);
    CHECK(l1 != l3);
    CHECK_THROWS(awgn_transmit(cw, 0.0, 1));

    // E[LLR | b] = (1-2b) * 2/sigma^2
    double mean0 = 0.0, mean1 = 0.0;
    int n0 = 0, n1 = 0;
    for (int rep = 0; rep < 400; ++rep) {
        auto l = awgn_transmit(cw, sigma, 1000 + rep);
        for (size_t i = 0; i < cw.size(); ++i) {
            if (cw[i]) {
                mean1 += l[i];
                ++n1;
            } else {
                mean0 += l[i];
                ++n0;
            }
        }
    }
    double expect = 2.0 / (sigma * sigma);
    CHECK(mean0 / n0 == doctest::Approx(expect).epsilon(0.02));
    CHECK(mean1 / n1 == doctest::Approx(-expect).epsilon(0.02));

    // sigma -> 0: signs recover the symbols
    auto tiny = awgn_transmit(cw, 1e-6, 9);
    for (size_t i = 0; i < cw.size(); ++i)
        CHECK((tiny[i] > 0) == (cw[i] == 0));
}

TEST_CASE("wilson interval") {
    double lo, hi;
    wilson_interval(0, 0, lo, hi);
    CHECK(lo == 0.0);
    CHECK(hi == 0.0);
    wilson_interval(10, 100, lo, hi);
    CHECK(lo < 0.1);
    CHECK(hi > 0.1);
    double lo2, hi2;
    wilson_interval(100, 1000, lo2, hi2);
    CHECK(hi2 - lo2 < hi - lo);  // shrinks with more trials
}

TEST_CASE("noiseless smoke: BLER 0") {
    CodeConfig cfg = test_code(6, 32);
    SimConfig sim;
    sim.ebn0_grid_db = {2.0};
    sim.max_blocks = 100;
    sim.target_errors = 1;
    sim.noiseless = true;
    SimResult res = run_bler(cfg, sim);
    REQUIRE(res.points.size() == 1);
    CHECK(res.points[0].blocks == 100);
    CHECK(res.points[0].block_errors == 0);
    CHECK(res.points[0].bler == 0.0);
}

TEST_CASE("worker-count independence") {
    CodeConfig cfg = test_code(6, 32);
    SimConfig sim;
    sim.ebn0_grid_db = {1.0, 2.0};
    sim.max_blocks = 2000;
    sim.target_errors = 40;
    sim.master_seed = 77;
    sim.list_size = 2;
    sim.workers = 1;
    SimResult r1 = run_bler(cfg, sim);
    sim.workers = 8;
    SimResult r8 = run_bler(cfg, sim);
    REQUIRE(r1.points.size() == r8.points.size());
    for (size_t s = 0; s < r1.points.size(); ++s) {
        CHECK(r1.points[s].blocks == r8.points[s].blocks);
        CHECK(r1.points[s].block_errors == r8.points[s].block_errors);
        CHECK(r1.points[s].bit_errors == r8.points[s].bit_errors);
        CHECK(r1.points[s].prune == r8.points[s].prune);
        CHECK(r1.points[s].ml_like == r8.points[s].ml_like);
    }
}

TEST_CASE("genie partition and SC bound at a simulated point") {
    CodeConfig cfg = test_code(6, 32);
    SimConfig sim;
    sim.ebn0_grid_db = {1.5};
    sim.max_blocks = 20000;
    sim.target_errors = 60;
    sim.master_seed = 5;
    SimResult res = run_bler(cfg, sim);
    const SimPoint& pt = res.points[0];
    CHECK(pt.prune + pt.ml_like == pt.block_errors);
    CHECK(pt.bler >= pt.bler_lo);
    CHECK(pt.bler <= pt.bler_hi);

    // SC BLER <= sum P_i^SC within 2 MC standard errors
    ReliabilityProfile prof = ga_awgn(6, 1.5, 0.5);
    double bound = 0.0;
    for (uint32_t i : cfg.info_set) bound += prof.values[i];
    double se = std::sqrt(pt.bler * (1 - pt.bler) / (double)pt.blocks);
    CHECK(pt.bler <= bound + 2 * se);

    // SC first-error histogram partitions the errors
    uint64_t hist_total = 0;
    for (uint64_t c : pt.first_error_hist) hist_total += c;
    CHECK(hist_total == pt.block_errors);
}

TEST_CASE("early stop honors target errors and max blocks") {
    CodeConfig cfg = test_code(5, 16);
    SimConfig sim;
    sim.ebn0_grid_db = {0.0};
    sim.max_blocks = 100000;
    sim.target_errors = 25;
    sim.batch_size = 64;
    SimResult res = run_bler(cfg, sim);
    CHECK(res.points[0].block_errors >= 25);
    CHECK(res.points[0].blocks % 64 == 0);
    CHECK(res.points[0].blocks < 100000);

    sim.max_blocks = 128;
    sim.target_errors = 1000000;
    res = run_bler(cfg, sim);
    CHECK(res.points[0].blocks == 128);
    CHECK_THROWS(run_bler(cfg, SimConfig{}));  // empty grid
}
