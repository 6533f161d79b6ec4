#include "pf/monomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace pf {

bool valid_space(int m) { return m >= 1 && m <= kMaxM; }

static void check_space(const MonomialSpace& sp) {
    if (!valid_space(sp.m) || sp.n != (1u << sp.m))
        throw std::domain_error("monomial space out of range");
}

uint32_t mask_of_index(uint32_t i, const MonomialSpace& sp) {
    check_space(sp);
    if (i >= sp.n) throw std::domain_error("index out of range");
    return (~i) & (sp.n - 1);
}

uint32_t index_of_mask(uint32_t varmask, const MonomialSpace& sp) {
    check_space(sp);
    if (varmask >= sp.n) throw std::domain_error("variable index out of range");
    return (~varmask) & (sp.n - 1);
}

int degree_of_mask(uint32_t varmask) { return std::popcount(varmask); }

int degree_of_index(uint32_t i, const MonomialSpace& sp) {
    return sp.m - std::popcount(i & (sp.n - 1));
}

std::vector<uint8_t> evaluate_mask(uint32_t varmask, const MonomialSpace& sp) {
    check_space(sp);
    if (varmask >= sp.n) throw std::domain_error("variable index out of range");
    std::vector<uint8_t> out(sp.n);
    for (uint32_t j = 0; j < sp.n; ++j) out[j] = ((j & varmask) == 0) ? 1 : 0;
    return out;
}

bool precedes(uint32_t fmask, uint32_t gmask, const MonomialSpace& sp) {
    check_space(sp);
    if (fmask >= sp.n || gmask >= sp.n) throw std::domain_error("mask out of range");
    if (std::popcount(fmask) > std::popcount(gmask)) return false;
    // Greedy matching: each variable of f (ascending) takes the smallest
    // unused variable of g that is >= it.
    int cursor = 0;
    for (int t = 0; t < sp.m; ++t) {
        if (!(fmask >> t & 1)) continue;
        if (cursor < t) cursor = t;
        while (cursor < sp.m && !(gmask >> cursor & 1)) ++cursor;
        if (cursor == sp.m) return false;
        ++cursor;
    }
    return true;
}

bool precedes_idx(uint32_t i, uint32_t j, const MonomialSpace& sp) {
    return precedes(mask_of_index(i, sp), mask_of_index(j, sp), sp);
}

void elementary_preds(uint32_t idx, const MonomialSpace& sp,
                      std::vector<uint32_t>& out) {
    out.clear();
    uint32_t mask = mask_of_index(idx, sp);
    for (int t = 0; t < sp.m; ++t) {
        if (!(mask >> t & 1)) continue;
        out.push_back(index_of_mask(mask ^ (1u << t), sp));
        if (t > 0 && !(mask >> (t - 1) & 1))
            out.push_back(index_of_mask((mask ^ (1u << t)) | (1u << (t - 1)), sp));
    }
}

void elementary_succs(uint32_t idx, const MonomialSpace& sp,
                      std::vector<uint32_t>& out) {
    out.clear();
    uint32_t mask = mask_of_index(idx, sp);
    for (int t = 0; t < sp.m; ++t) {
        if (!(mask >> t & 1)) {
            out.push_back(index_of_mask(mask | (1u << t), sp));
        } else if (t + 1 < sp.m && !(mask >> (t + 1) & 1)) {
            out.push_back(index_of_mask((mask ^ (1u << t)) | (1u << (t + 1)), sp));
        }
    }
}

DecreasingCheck is_decreasing(const std::vector<uint32_t>& set,
                              const MonomialSpace& sp,
                              size_t max_violations) {
    check_space(sp);
    DecreasingCheck res;
    std::unordered_set<uint32_t> members(set.begin(), set.end());
    std::vector<uint32_t> preds;
    for (uint32_t i : set) {
        elementary_preds(i, sp, preds);
        for (uint32_t p : preds) {
            if (!members.count(p)) {
                res.ok = false;
                if (res.violations.size() < max_violations)
                    res.violations.emplace_back(p, i);
            }
        }
    }
    return res;
}

std::vector<uint32_t> decreasing_closure(const std::vector<uint32_t>& set,
                                         const MonomialSpace& sp) {
    check_space(sp);
    std::unordered_set<uint32_t> seen(set.begin(), set.end());
    std::vector<uint32_t> stack(set.begin(), set.end());
    std::vector<uint32_t> preds;
    while (!stack.empty()) {
        uint32_t i = stack.back();
        stack.pop_back();
        elementary_preds(i, sp, preds);
        for (uint32_t p : preds)
            if (seen.insert(p).second) stack.push_back(p);
    }
    std::vector<uint32_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint32_t> admissible_frontier(const std::vector<uint32_t>& set,
                                          int cap_degree,
                                          const MonomialSpace& sp) {
    check_space(sp);
    std::unordered_set<uint32_t> members(set.begin(), set.end());
    std::unordered_set<uint32_t> cand;
    std::vector<uint32_t> tmp;
    if (set.empty()) {
        if (cap_degree >= 0) return {sp.n - 1};  // the constant monomial
        return {};
    }
    for (uint32_t i : set) {
        elementary_succs(i, sp, tmp);
        for (uint32_t s : tmp)
            if (!members.count(s) && degree_of_index(s, sp) <= cap_degree)
                cand.insert(s);
    }
    std::vector<uint32_t> out;
    for (uint32_t c : cand) {
        elementary_preds(c, sp, tmp);
        bool ok = true;
        for (uint32_t p : tmp)
            if (!members.count(p)) { ok = false; break; }
        if (ok) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pf
