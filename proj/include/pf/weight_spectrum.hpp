#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pf/monomial.hpp"
#include "pf/reliability.hpp"

namespace pf {

using bigint = boost::multiprecision::cpp_int;

// Gap count |lambda_f|: over the variables of f, how many smaller variable
// indices are absent. Exponent in the orbit size 2^{r + |lambda_f|}.
int lambda_size(uint32_t varmask, const MonomialSpace& sp);

// 2^{r + |lambda_f|} if deg(f) == r, else 0.
bigint min_weight_contribution(uint32_t varmask, int r, const MonomialSpace& sp);

struct WeightReport {
    int r = 0;                 // maximum degree in the set
    uint64_t wmin = 0;         // 2^{m-r}
    bigint awmin = 0;          // exact minimum-weight multiplicity
    // index -> contribution 2^{r+lambda}, degree-r indices only
    std::map<uint32_t, bigint> per_index;
    double ub_wmin = 0.0;      // awmin * Z(W)^wmin
    double sc_sum = 0.0;       // sum of the profile metric over the set
};

// The closed forms below are proven for decreasing sets only; callers must
// pass one (checked, throws std::invalid_argument otherwise).
uint64_t wmin_of(const std::vector<uint32_t>& set, const MonomialSpace& sp);
WeightReport awmin_of(const std::vector<uint32_t>& set, const MonomialSpace& sp);

// Same closed form without the down-closure check. The result is only the
// true multiplicity for decreasing sets; reporting paths use this for sets
// that narrowly violate closure and flag them.
WeightReport awmin_unchecked(const std::vector<uint32_t>& set,
                             const MonomialSpace& sp);

// Minimum weight over codewords whose message coordinate i is set:
// 2^{m - deg(f_i)} for decreasing sets.
uint64_t bitwise_wmin(uint32_t i, const std::vector<uint32_t>& set,
                      const MonomialSpace& sp);

double ub_min_weight(const std::vector<uint32_t>& set, const MonomialSpace& sp,
                     const ChannelModel& model);

double sc_sum_bound(const std::vector<uint32_t>& set,
                    const ReliabilityProfile& prof);

// For each sub-maximal degree d present in the set, the decay ratio
// Z^{2^{m-d}} / Z^{2^{m-r}} of its bitwise pairwise bound against the
// dominant degree-r term.
std::map<int, double> ml_negligibility_ratio(const std::vector<uint32_t>& set,
                                             const MonomialSpace& sp,
                                             const ChannelModel& model);

double bigint_log(const bigint& v);  // natural log, v > 0

}  // namespace pf
