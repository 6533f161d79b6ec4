#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "pf/io.hpp"

using namespace pf;
using nlohmann::json;

TEST_CASE("channel json round trip") {
    ChannelModel bec = ChannelModel::bec(0.37);
    ChannelModel back = channel_from_json(channel_to_json(bec));
    CHECK(back.kind == ChannelKind::BEC);
    CHECK(back.eps == doctest::Approx(0.37));

    ChannelModel awgn = ChannelModel::awgn(3.5, 0.25);
    back = channel_from_json(channel_to_json(awgn));
    CHECK(back.kind == ChannelKind::BiAWGN);
    CHECK(back.ebn0_db == doctest::Approx(3.5));
    CHECK(back.rate == doctest::Approx(0.25));

    CHECK_THROWS(channel_from_json(json{{"kind", "bsc"}, {"p", 0.1}}));
}

TEST_CASE("design json round trip") {
    DesignSpec spec;
    spec.m = 7;
    spec.k = 64;
    spec.channel = ChannelModel::awgn(4.0, 0.5);
    spec.strategy = Strategy::Mixed;
    InformationSet set = construct(spec);
    json j = design_to_json(set);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("n") == 128);
    CHECK(j.at("k") == 64);
    CHECK(j.at("strategy") == "mixed");
    CHECK(j.contains("degree_cap"));
    CHECK(j.contains("f_k"));

    InformationSet back = design_from_json(j);
    CHECK(back.m == set.m);
    CHECK(back.k == set.k);
    CHECK(back.indices == set.indices);
    CHECK(back.strategy == set.strategy);
    CHECK(back.degree_cap == set.degree_cap);
}

TEST_CASE("design json error paths") {
    json bad;
    bad["n"] = 100;  // not a power of two
    bad["k"] = 10;
    bad["strategy"] = "reliability";
    bad["channel"] = {{"kind", "bec"}, {"eps", 0.5}};
    bad["indices"] = std::vector<uint32_t>(10, 0);
    CHECK_THROWS(design_from_json(bad));
    bad["n"] = 16;
    bad["indices"] = std::vector<uint32_t>{0, 1, 2};  // size != k
    CHECK_THROWS(design_from_json(bad));
    bad["k"] = 3;
    bad["indices"] = std::vector<uint32_t>{0, 1, 99};  // out of range
    CHECK_THROWS(design_from_json(bad));
    bad["indices"] = std::vector<uint32_t>{0, 1, 2};
    bad["strategy"] = "nonsense";
    CHECK_THROWS(design_from_json(bad));
}

TEST_CASE("spec json parsing") {
    json j;
    j["n"] = 128;
    j["k"] = 64;
    j["channel"] = {{"kind", "awgn"}, {"ebn0_db", 4.0}, {"rate", 0.5}};
    DesignSpec spec = spec_from_json(j);
    CHECK(spec.m == 7);
    CHECK(spec.k == 64);
    CHECK(spec.strategy == Strategy::Reliability);
    CHECK(spec.alpha == 100.0);
    CHECK(!spec.degree_cap);
    j["strategy"] = "mixed";
    j["alpha"] = 50.0;
    j["degree_cap"] = 3;
    spec = spec_from_json(j);
    CHECK(spec.strategy == Strategy::Mixed);
    CHECK(spec.alpha == 50.0);
    CHECK(spec.degree_cap.value() == 3);
}

TEST_CASE("analyze_design emits the table metrics") {
    DesignSpec spec;
    spec.m = 7;
    spec.k = 64;
    spec.channel = ChannelModel::awgn(4.0, 0.5);
    InformationSet rel = construct(spec);
    json j = analyze_design(rel, spec.channel);
    CHECK(j.at("wmin") == 8);
    CHECK(j.at("awmin") == "304");
    CHECK(j.at("decreasing") == true);
    CHECK(j.at("sc_sum").get<double>() == doctest::Approx(2.29e-3).epsilon(0.15));
    CHECK(j.at("ub_wmin").get<double>() == doctest::Approx(1.3e-2).epsilon(0.05));
    CHECK(j.at("ml_negligibility").is_object());

    // rate-1 design only gets a warning
    DesignSpec full;
    full.m = 3;
    full.k = 8;
    full.channel = ChannelModel::bec(0.5);
    json w = analyze_design(construct(full), full.channel);
    CHECK(w.contains("warning"));
    CHECK(w.at("wmin") == 1);
}

TEST_CASE("csv emitters") {
    SweepResult sweep = staircase_sweep(4, 8, ChannelKind::BEC, {0.5, 2.0, 8.0});
    std::string csv = sweep_to_csv(sweep, 4);
    CHECK(csv.rfind("rho,param,wmin,jump,n_1,n_2,n_4,n_8,n_16\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    SimResult sim;
    SimPoint pt;
    pt.ebn0_db = 2.0;
    pt.blocks = 100;
    pt.block_errors = 7;
    pt.bler = 0.07;
    pt.prune = 4;
    pt.ml_like = 3;
    sim.points.push_back(pt);
    std::string scsv = sim_to_csv(sim);
    CHECK(scsv.rfind("ebn0_db,blocks,blk_errs,bler,bler_lo,bler_hi,prune,ml_like\n", 0) ==
          0);
    CHECK(scsv.find("2,100,7,0.07,") != std::string::npos);
}

TEST_CASE("oracle suite passes at a small budget") {
    json rep = run_oracle_suite(3, 10, 12, 7);
    CHECK(rep.at("pass") == true);
    CHECK(rep.at("failures").empty());
    CHECK(rep.at("checks").get<uint64_t>() > 100);
    CHECK_THROWS(run_oracle_suite(9, 0, 0, 0));
}
