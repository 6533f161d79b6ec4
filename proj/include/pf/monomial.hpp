#pragma once

#include <cstdint>
#include <vector>
#include <utility>

// Monomial algebra for length N = 2^m evaluation codes.
//
// A monomial over variables x_0..x_{m-1} is stored as an m-bit mask of its
// variable set. The channel index of a monomial is the complement mask:
//   index(f) = sum over t not in vars(f) of 2^t
// so that the evaluation of f (with negated variables) is exactly row
// index(f) of the Kronecker power G_2^{tensor m}, and row weight is
// 2^popcount(index).

namespace pf {

struct MonomialSpace {
    int m = 1;
    uint32_t n = 2;

    explicit MonomialSpace(int m_) : m(m_), n(1u << m_) {}
};

constexpr int kMaxM = 30;

bool valid_space(int m);

// index <-> variable-mask bijection
uint32_t mask_of_index(uint32_t i, const MonomialSpace& sp);
uint32_t index_of_mask(uint32_t varmask, const MonomialSpace& sp);
int degree_of_index(uint32_t i, const MonomialSpace& sp);
int degree_of_mask(uint32_t varmask);

// Evaluation vector of the monomial with variable set `varmask`:
// out[j] = 1 iff (j & varmask) == 0. Equals row index_of_mask(varmask) of G_N.
std::vector<uint8_t> evaluate_mask(uint32_t varmask, const MonomialSpace& sp);

// Partial order on monomials (masks). For equal degree: sorted variable
// lists dominate elementwise. For deg(f) < deg(g): f precedes some
// degree-|f| divisor of g. Both cases are handled by one greedy matching.
bool precedes(uint32_t fmask, uint32_t gmask, const MonomialSpace& sp);

// Convenience: order on channel indices.
bool precedes_idx(uint32_t i, uint32_t j, const MonomialSpace& sp);

// Covering moves in index space: the indices whose monomials sit directly
// below f_i (drop one variable, or shift one variable down into a gap).
// Any set closed under these moves is closed under the full order.
void elementary_preds(uint32_t idx, const MonomialSpace& sp,
                      std::vector<uint32_t>& out);
void elementary_succs(uint32_t idx, const MonomialSpace& sp,
                      std::vector<uint32_t>& out);

struct DecreasingCheck {
    bool ok = true;
    // (missing predecessor index, member index) witnesses
    std::vector<std::pair<uint32_t, uint32_t>> violations;
};

DecreasingCheck is_decreasing(const std::vector<uint32_t>& set,
                              const MonomialSpace& sp,
                              size_t max_violations = 16);

// Smallest decreasing superset (down-set closure). Sorted output.
std::vector<uint32_t> decreasing_closure(const std::vector<uint32_t>& set,
                                         const MonomialSpace& sp);

// Indices not in the decreasing set S whose whole strict down-set lies in S,
// restricted to monomial degree <= cap_degree. Sorted output.
std::vector<uint32_t> admissible_frontier(const std::vector<uint32_t>& set,
                                          int cap_degree,
                                          const MonomialSpace& sp);

}  // namespace pf
