#include "pf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "pf/simulator.hpp"

namespace pf {

namespace {

// evaluation vectors packed into 64-bit words
using Word = uint64_t;

std::vector<std::vector<Word>> packed_rows(const std::vector<uint32_t>& set,
                                           const MonomialSpace& sp) {
    size_t words = (sp.n + 63) / 64;
    std::vector<std::vector<Word>> rows;
    rows.reserve(set.size());
    for (uint32_t i : set) {
        uint32_t varmask = mask_of_index(i, sp);
        std::vector<Word> row(words, 0);
        for (uint32_t j = 0; j < sp.n; ++j)
            if ((j & varmask) == 0) row[j / 64] |= (Word(1) << (j % 64));
        rows.push_back(std::move(row));
    }
    return rows;
}

uint64_t weight_of(const std::vector<Word>& w) {
    uint64_t c = 0;
    for (Word x : w) c += std::popcount(x);
    return c;
}

}  // namespace

std::map<uint64_t, uint64_t> enumerate_weights(const std::vector<uint32_t>& set,
                                               const MonomialSpace& sp,
                                               const EnumerationBudget& budget) {
    if (set.size() > budget.max_k) throw std::domain_error("enumeration budget exceeded");
    auto rows = packed_rows(set, sp);
    size_t words = (sp.n + 63) / 64;
    std::vector<Word> acc(words, 0);
    std::map<uint64_t, uint64_t> hist;
    ++hist[0];
    uint64_t total = uint64_t(1) << set.size();
    for (uint64_t g = 1; g < total; ++g) {
        int flip = std::countr_zero(g);  // Gray code: one row toggles per step
        for (size_t w = 0; w < words; ++w) acc[w] ^= rows[flip][w];
        ++hist[weight_of(acc)];
    }
    return hist;
}

uint64_t oracle_bitwise_wmin(const std::vector<uint32_t>& set, uint32_t i,
                             const MonomialSpace& sp,
                             const EnumerationBudget& budget) {
    auto pos = std::find(set.begin(), set.end(), i);
    if (pos == set.end()) throw std::domain_error("index not in the set");
    if (set.size() > budget.max_k) throw std::domain_error("enumeration budget exceeded");
    std::vector<uint32_t> others(set.begin(), set.end());
    others.erase(others.begin() + (pos - set.begin()));
    auto rows = packed_rows(others, sp);
    auto fixed = packed_rows({i}, sp)[0];
    size_t words = (sp.n + 63) / 64;
    std::vector<Word> acc = fixed;
    uint64_t best = weight_of(acc);
    uint64_t total = uint64_t(1) << others.size();
    for (uint64_t g = 1; g < total; ++g) {
        int flip = std::countr_zero(g);
        for (size_t w = 0; w < words; ++w) acc[w] ^= rows[flip][w];
        best = std::min(best, weight_of(acc));
    }
    return best;
}

uint64_t oracle_orbit(uint32_t varmask, const MonomialSpace& sp,
                      const EnumerationBudget& budget) {
    if (sp.m > budget.max_m) throw std::domain_error("orbit budget exceeded");
    if (varmask == 0 || varmask >= sp.n) throw std::domain_error("orbit needs degree >= 1");
    int m = sp.m;
    int nb = m * (m - 1) / 2;  // strictly-lower-triangular coefficients
    std::set<uint32_t> fingerprints;  // n <= 16, vectors fit in 32 bits
    for (uint32_t bmask = 0; bmask < (1u << nb); ++bmask) {
        // b[t][j] for j < t, packed row by row
        for (uint32_t emask = 0; emask < sp.n; ++emask) {
            uint32_t vec = 0;
            for (uint32_t z = 0; z < sp.n; ++z) {
                int bpos = 0;
                uint32_t val = 1;
                for (int t = 0; t < m; ++t) {
                    uint32_t yt = (z >> t) & 1u;
                    for (int j = 0; j < t; ++j, ++bpos)
                        if (bmask >> bpos & 1) yt ^= (z >> j) & 1u;
                    yt ^= (emask >> t) & 1u;
                    if (varmask >> t & 1) val &= (yt ^ 1u);
                }
                if (val) vec |= (1u << z);
            }
            fingerprints.insert(vec);
        }
    }
    return fingerprints.size();
}

std::vector<std::vector<uint32_t>> all_decreasing_sets(const MonomialSpace& sp) {
    if (sp.m > 4) throw std::domain_error("exhaustive mode limited to m <= 4");
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t sub = 0; sub < (1u << sp.n); ++sub) {
        std::vector<uint32_t> set;
        for (uint32_t i = 0; i < sp.n; ++i)
            if (sub >> i & 1) set.push_back(i);
        if (is_decreasing(set, sp, 1).ok) out.push_back(std::move(set));
    }
    return out;
}

std::vector<std::vector<uint32_t>> sample_decreasing_sets(const MonomialSpace& sp,
                                                          size_t count,
                                                          uint32_t max_size,
                                                          uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<uint32_t>> out;
    while (out.size() < count) {
        uint32_t target = 1 + (uint32_t)(rng.next_u64() % max_size);
        std::vector<uint32_t> set;
        while (set.size() < target) {
            auto frontier = admissible_frontier(set, sp.m, sp);
            if (frontier.empty()) break;
            set.push_back(frontier[rng.next_u64() % frontier.size()]);
            std::sort(set.begin(), set.end());
        }
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace pf
