#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pf/construction.hpp"

using namespace pf;

TEST_CASE("rm_rstar") {
    CHECK(rm_rstar(7, 64) == 3);
    CHECK(rm_rstar(4, 1) == 0);
    CHECK(rm_rstar(4, 8) == 2);
    CHECK(rm_rstar(4, 16) == 4);
    CHECK_THROWS(rm_rstar(3, 9));
    CHECK(max_set_size_for_cap(7, 3) == 64);
    CHECK(max_set_size_for_cap(15, 7) == 16384);
    CHECK(max_set_size_for_cap(4, 0) == 1);
    CHECK(max_set_size_for_cap(4, 4) == 16);
}

TEST_CASE("reliability construction basics") {
    DesignSpec spec;
    spec.m = 2;
    spec.k = 1;
    spec.channel = ChannelModel::bec(0.5);
    InformationSet set = construct_reliability(spec);
    CHECK(set.indices == std::vector<uint32_t>{3});

    spec.k = 4;
    set = construct_reliability(spec);
    CHECK(set.indices.size() == 4);

    spec.k = 9;
    CHECK_THROWS(construct_reliability(spec));
}

TEST_CASE("mixed cost identity") {
    MonomialSpace sp(7);
    ReliabilityProfile prof = ga_awgn(7, 4.0, 0.5);
    // f = x4x5x6 -> index with mask complement
    uint32_t i = index_of_mask(0b1110000, sp);
    double j3 = mixed_cost(i, prof, sp, 3, 100.0);
    double z = channel_bhattacharyya(prof.channel);
    CHECK(j3 - prof.values[i] ==
          doctest::Approx(100.0 * 32768.0 * std::pow(z, 16)).epsilon(1e-9));
    CHECK(j3 - prof.values[i] == doctest::Approx(6.0e-3).epsilon(0.02));
    // below the target degree the penalty vanishes
    CHECK(mixed_cost(i, prof, sp, 4, 100.0) == prof.values[i]);
    CHECK(mixed_cost(i, prof, sp, 3, 0.0) == prof.values[i]);
}

TEST_CASE("mixed construction reduces to reliability at alpha 0") {
    // BEC(0.5) m=6 K=32: reliability top-K is decreasing, so the alpha=0
    // greedy with cap r_rel must reproduce it
    DesignSpec spec;
    spec.m = 6;
    spec.k = 32;
    spec.channel = ChannelModel::bec(0.5);
    spec.alpha = 0.0;
    InformationSet rel = construct_reliability(spec);
    MonomialSpace sp(6);
    REQUIRE(is_decreasing(rel.indices, sp).ok);
    int r_rel = 0;
    for (uint32_t i : rel.indices) r_rel = std::max(r_rel, degree_of_index(i, sp));
    spec.strategy = Strategy::Mixed;
    spec.degree_cap = r_rel;
    InformationSet mix = construct_mixed(spec);
    CHECK(mix.indices == rel.indices);
}

TEST_CASE("mixed construction output contract") {
    DesignSpec spec;
    spec.m = 7;
    spec.k = 64;
    spec.channel = ChannelModel::awgn(4.0, 0.5);
    spec.strategy = Strategy::Mixed;
    InformationSet mix = construct_mixed(spec);
    MonomialSpace sp(7);
    CHECK(mix.indices.size() == 64);
    CHECK(is_decreasing(mix.indices, sp).ok);
    CHECK(std::is_sorted(mix.indices.begin(), mix.indices.end()));
    // J_K identity on stored values
    double f_k = 0.0;
    for (size_t t = 0; t < mix.indices.size(); ++t) {
        double j = mixed_cost(mix.indices[t], profile_for(mix.channel, 7), sp,
                              mix.degree_cap, mix.alpha);
        CHECK(mix.j_cost[t] == doctest::Approx(j).epsilon(1e-12));
        f_k += j;
    }
    CHECK(mix.f_k == doctest::Approx(f_k).epsilon(1e-9));
}

TEST_CASE("huge alpha with cap r-1 doubles wmin") {
    DesignSpec spec;
    spec.m = 7;
    spec.k = 64;
    spec.channel = ChannelModel::awgn(4.0, 0.5);
    spec.strategy = Strategy::Mixed;
    InformationSet rel = construct_reliability(spec);
    MonomialSpace sp(7);
    int r_rel = 0;
    for (uint32_t i : rel.indices) r_rel = std::max(r_rel, degree_of_index(i, sp));
    spec.alpha = 1e12;
    spec.degree_cap = r_rel - 1;
    InformationSet mix = construct_mixed(spec);
    int r_mix = 0;
    for (uint32_t i : mix.indices) r_mix = std::max(r_mix, degree_of_index(i, sp));
    CHECK(r_mix <= r_rel - 1);
    CHECK(awmin_unchecked(mix.indices, sp).wmin >=
          2 * awmin_unchecked(rel.indices, sp).wmin);
}

TEST_CASE("infeasible caps rejected") {
    DesignSpec spec;
    spec.m = 4;
    spec.k = 8;
    spec.channel = ChannelModel::bec(0.5);
    spec.strategy = Strategy::Mixed;
    spec.degree_cap = 1;  // 1 + 4 = 5 < 8
    CHECK_THROWS(construct_mixed(spec));
    spec.degree_cap = 2;
    CHECK(construct_mixed(spec).indices.size() == 8);
}

TEST_CASE("staircase sweep: monotone wmin with RM plateau") {
    std::vector<double> grid;
    for (int t = 0; t < 40; ++t) grid.push_back(0.5 + t * 0.4);
    SweepResult res = staircase_sweep(4, 8, ChannelKind::BEC, grid);
    CHECK(res.rstar == 2);
    CHECK(res.plateau_wmin == 4);
    uint64_t prev = 0;
    for (const auto& pt : res.points) {
        CHECK(pt.wmin >= prev);
        prev = pt.wmin;
    }
    CHECK(res.points.back().wmin == 4);
    // histogram rows sum to K
    for (const auto& pt : res.points) {
        uint32_t total = 0;
        for (uint32_t c : pt.hist_d) total += c;
        CHECK(total == 8);
    }
    CHECK_THROWS(staircase_sweep(4, 8, ChannelKind::BEC, {}));
    CHECK_THROWS(staircase_sweep(4, 8, ChannelKind::BEC, {2.0, 1.0}));
}

TEST_CASE("compare_sets") {
    DesignSpec spec;
    spec.m = 7;
    spec.k = 64;
    spec.channel = ChannelModel::awgn(4.0, 0.5);
    InformationSet rel = construct_reliability(spec);
    spec.strategy = Strategy::Mixed;
    InformationSet mix = construct_mixed(spec);

    CompareReport self = compare_sets(rel, rel, spec.channel);
    CHECK(self.sym_diff == 0);
    CHECK(self.d_sum == 0.0);
    CHECK(self.ub_a == self.ub_b);

    CompareReport rep = compare_sets(rel, mix, spec.channel);
    CHECK(rep.sym_diff == 10);
    CHECK(rep.wmin_a == 8);
    CHECK(rep.wmin_b == 16);
    CHECK(rep.awmin_a == bigint(304));
    CHECK(rep.awmin_b == bigint(94488));

    DesignSpec other = spec;
    other.k = 32;
    InformationSet small = construct_reliability(other);
    CHECK_THROWS(compare_sets(rel, small, spec.channel));
}
