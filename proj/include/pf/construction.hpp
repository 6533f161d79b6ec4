#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pf/monomial.hpp"
#include "pf/reliability.hpp"
#include "pf/weight_spectrum.hpp"

namespace pf {

enum class Strategy { Reliability, Mixed };

struct DesignSpec {
    int m = 7;
    uint32_t k = 64;
    ChannelModel channel;
    double alpha = 100.0;
    std::optional<int> degree_cap;  // nullopt = auto ({r_rel, r_rel-1} by F_K)
    Strategy strategy = Strategy::Reliability;
};

struct InformationSet {
    int m = 0;
    uint32_t k = 0;
    std::vector<uint32_t> indices;  // sorted, size k
    Strategy strategy = Strategy::Reliability;
    ChannelModel channel;
    double alpha = 0.0;
    int degree_cap = -1;            // cap used (mixed only)
    double f_k = 0.0;               // sum of J_K over the set (mixed only)
    // per-index metrics, parallel to `indices`
    std::vector<double> metric;     // Z_i or P_i^SC
    std::vector<double> j_cost;     // J_K(i) = metric + alpha * D_K(i)
};

// The K channels with the smallest reliability metric.
InformationSet construct_reliability(const DesignSpec& spec);

// J_K(i) for a candidate maximum degree r: metric_i + alpha * C_K(i) * Z^{2^{m-r}}.
double mixed_cost(uint32_t i, const ReliabilityProfile& prof,
                  const MonomialSpace& sp, int r, double alpha);

// Greedy frontier growth of a decreasing size-K set minimizing the running
// sum of J_K. Auto cap mode tries r_rel and r_rel - 1 and keeps the smaller
// total cost.
InformationSet construct_mixed(const DesignSpec& spec);

InformationSet construct(const DesignSpec& spec);

// Smallest r* with sum_{t<=r*} C(m,t) >= K.
int rm_rstar(int m, uint32_t k);

// Largest decreasing set size with max degree <= r (binomial sum).
uint64_t max_set_size_for_cap(int m, int r);

struct SweepPoint {
    double rho = 0.0;       // BEC: eps = exp(-rho); BiAWGN: Eb/N0 in dB
    double param = 0.0;     // resolved channel parameter (eps or dB)
    uint64_t wmin = 0;
    bool jump = false;      // wmin grew relative to the previous grid point
    std::vector<uint32_t> hist_d;  // count of selected rows per log2 row weight
};

struct SweepResult {
    std::vector<SweepPoint> points;
    int rstar = 0;
    uint64_t plateau_wmin = 0;  // 2^{m - r*}
};

SweepResult staircase_sweep(int m, uint32_t k, ChannelKind family,
                            const std::vector<double>& rho_grid);

struct CompareReport {
    uint32_t sym_diff = 0;
    bool decreasing_a = true, decreasing_b = true;
    double d_sum = 0.0;         // sum-metric delta (b minus a)
    uint64_t wmin_a = 0, wmin_b = 0;
    bigint awmin_a = 0, awmin_b = 0;
    double ub_a = 0.0, ub_b = 0.0;
    double sum_a = 0.0, sum_b = 0.0;
};

CompareReport compare_sets(const InformationSet& a, const InformationSet& b,
                           const ChannelModel& model);

ReliabilityProfile profile_for(const ChannelModel& model, int m);

}  // namespace pf
