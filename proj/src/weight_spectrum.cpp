#include "pf/weight_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pf {

int lambda_size(uint32_t varmask, const MonomialSpace& sp) {
    int total = 0, seen = 0;
    for (int t = 0; t < sp.m; ++t) {
        if (varmask >> t & 1) {
            total += t - seen;
            ++seen;
        }
    }
    return total;
}

bigint min_weight_contribution(uint32_t varmask, int r, const MonomialSpace& sp) {
    if (degree_of_mask(varmask) != r) return 0;
    return bigint(1) << (r + lambda_size(varmask, sp));
}

static void require_decreasing(const std::vector<uint32_t>& set,
                               const MonomialSpace& sp) {
    if (set.empty()) throw std::invalid_argument("empty index set");
    if (!is_decreasing(set, sp, 1).ok)
        throw std::invalid_argument("closed forms require a decreasing set");
}

static int max_degree(const std::vector<uint32_t>& set, const MonomialSpace& sp) {
    int r = 0;
    for (uint32_t i : set) r = std::max(r, degree_of_index(i, sp));
    return r;
}

uint64_t wmin_of(const std::vector<uint32_t>& set, const MonomialSpace& sp) {
    require_decreasing(set, sp);
    return uint64_t(1) << (sp.m - max_degree(set, sp));
}

WeightReport awmin_of(const std::vector<uint32_t>& set, const MonomialSpace& sp) {
    require_decreasing(set, sp);
    return awmin_unchecked(set, sp);
}

WeightReport awmin_unchecked(const std::vector<uint32_t>& set,
                             const MonomialSpace& sp) {
    if (set.empty()) throw std::invalid_argument("empty index set");
    WeightReport rep;
    rep.r = max_degree(set, sp);
    rep.wmin = uint64_t(1) << (sp.m - rep.r);
    for (uint32_t i : set) {
        uint32_t mask = mask_of_index(i, sp);
        if (degree_of_mask(mask) != rep.r) continue;
        bigint c = min_weight_contribution(mask, rep.r, sp);
        rep.per_index[i] = c;
        rep.awmin += c;
    }
    return rep;
}

uint64_t bitwise_wmin(uint32_t i, const std::vector<uint32_t>& set,
                      const MonomialSpace& sp) {
    require_decreasing(set, sp);
    if (std::find(set.begin(), set.end(), i) == set.end())
        throw std::invalid_argument("index not in the set");
    // lightest codeword with u_i = 1 comes from the largest monomial above i
    int rf = degree_of_index(i, sp);
    for (uint32_t g : set)
        if (degree_of_index(g, sp) > rf && precedes_idx(i, g, sp))
            rf = degree_of_index(g, sp);
    return uint64_t(1) << (sp.m - rf);
}

double bigint_log(const bigint& v) {
    if (v <= 0) throw std::domain_error("log of non-positive multiplicity");
    size_t bits = boost::multiprecision::msb(v);
    if (bits <= 900) return std::log(v.convert_to<double>());
    bigint scaled = v >> (bits - 64);
    return std::log(scaled.convert_to<double>()) + (double)(bits - 64) * M_LN2;
}

double ub_min_weight(const std::vector<uint32_t>& set, const MonomialSpace& sp,
                     const ChannelModel& model) {
    WeightReport rep = awmin_of(set, sp);
    double lz = std::log(channel_bhattacharyya(model));
    return std::exp(bigint_log(rep.awmin) + (double)rep.wmin * lz);
}

double sc_sum_bound(const std::vector<uint32_t>& set,
                    const ReliabilityProfile& prof) {
    double s = 0.0;
    for (uint32_t i : set) {
        if (i >= prof.values.size()) throw std::invalid_argument("index outside profile");
        s += prof.values[i];
    }
    return s;
}

std::map<int, double> ml_negligibility_ratio(const std::vector<uint32_t>& set,
                                             const MonomialSpace& sp,
                                             const ChannelModel& model) {
    require_decreasing(set, sp);
    int r = max_degree(set, sp);
    double lz = std::log(channel_bhattacharyya(model));
    double wr = std::ldexp(1.0, sp.m - r);
    std::map<int, double> out;
    for (uint32_t i : set) {
        int d = degree_of_index(i, sp);
        if (out.count(d)) continue;
        double wd = std::ldexp(1.0, sp.m - d);
        out[d] = std::exp((wd - wr) * lz);
    }
    return out;
}

}  // namespace pf
