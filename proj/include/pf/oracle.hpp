#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pf/monomial.hpp"

namespace pf {

struct EnumerationBudget {
    uint32_t max_k = 24;  // codeword enumeration cap (2^K words)
    int max_m = 4;        // lower-triangular affine group enumeration cap
};

// Exact weight enumerator over all 2^|S| codewords (Gray-code stepping).
std::map<uint64_t, uint64_t> enumerate_weights(const std::vector<uint32_t>& set,
                                               const MonomialSpace& sp,
                                               const EnumerationBudget& budget = {});

// Minimum weight over codewords with message coordinate i set.
uint64_t oracle_bitwise_wmin(const std::vector<uint32_t>& set, uint32_t i,
                             const MonomialSpace& sp,
                             const EnumerationBudget& budget = {});

// Orbit size of a monomial's evaluation vector under the lower-triangular
// affine substitutions x_t <- x_t + sum_{j<t} b_{tj} x_j + e_t.
uint64_t oracle_orbit(uint32_t varmask, const MonomialSpace& sp,
                      const EnumerationBudget& budget = {});

// Every down-set of the monomial order (exhaustive; m <= 4).
std::vector<std::vector<uint32_t>> all_decreasing_sets(const MonomialSpace& sp);

// Random nonempty down-sets grown by frontier sampling, sizes <= max_size.
std::vector<std::vector<uint32_t>> sample_decreasing_sets(const MonomialSpace& sp,
                                                          size_t count,
                                                          uint32_t max_size,
                                                          uint64_t seed);

}  // namespace pf
