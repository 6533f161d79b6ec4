#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pf/monomial.hpp"

using namespace pf;

namespace {

// Reference divisor-enumeration order: f <= g iff deg(f) <= deg(g) and some
// degree-|f| divisor of g dominates f elementwise (sorted variable lists).
bool precedes_ref(uint32_t fmask, uint32_t gmask, int m) {
    if (fmask == gmask) return true;
    int df = __builtin_popcount(fmask), dg = __builtin_popcount(gmask);
    if (df > dg) return false;
    for (uint32_t sub = gmask;; sub = (sub - 1) & gmask) {
        if (__builtin_popcount(sub) == df) {
            std::vector<int> fv, gv;
            for (int t = 0; t < m; ++t) {
                if (fmask >> t & 1) fv.push_back(t);
                if (sub >> t & 1) gv.push_back(t);
            }
            bool ok = true;
            for (size_t l = 0; l < fv.size(); ++l) ok = ok && fv[l] <= gv[l];
            if (ok) return true;
        }
        if (sub == 0) break;
    }
    return false;
}

std::vector<uint32_t> transitive_downset(uint32_t idx, const MonomialSpace& sp) {
    std::vector<uint32_t> out;
    for (uint32_t j = 0; j < sp.n; ++j)
        if (precedes_idx(j, idx, sp)) out.push_back(j);
    return out;
}

}  // namespace

TEST_CASE("index/mask bijection and degrees") {
    for (int m = 1; m <= 6; ++m) {
        MonomialSpace sp(m);
        for (uint32_t i = 0; i < sp.n; ++i) {
            uint32_t mask = mask_of_index(i, sp);
            CHECK(index_of_mask(mask, sp) == i);
            CHECK(degree_of_index(i, sp) == degree_of_mask(mask));
            CHECK(degree_of_index(i, sp) == m - __builtin_popcount(i));
        }
    }
    MonomialSpace sp3(3);
    CHECK(mask_of_index(7, sp3) == 0);  // constant
    CHECK(mask_of_index(0, sp3) == 7);  // x0 x1 x2
    MonomialSpace sp2(2);
    CHECK(mask_of_index(1, sp2) == 2);  // x1
}

TEST_CASE("evaluation equals the matching Kronecker-power row") {
    for (int m = 1; m <= 6; ++m) {
        MonomialSpace sp(m);
        // build G_N = G_2^{tensor m} row by row: row i has 1 at j iff (j & ~i & (N-1)) == 0
        for (uint32_t i = 0; i < sp.n; ++i) {
            uint32_t mask = mask_of_index(i, sp);
            std::vector<uint8_t> ev = evaluate_mask(mask, sp);
            REQUIRE(ev.size() == sp.n);
            uint32_t weight = 0;
            for (uint32_t j = 0; j < sp.n; ++j) {
                uint8_t row_bit = ((j & ~i & (sp.n - 1)) == 0) ? 1 : 0;
                CHECK(ev[j] == row_bit);
                weight += ev[j];
            }
            CHECK(weight == (1u << (sp.m - degree_of_mask(mask))));
            CHECK(weight == (1u << __builtin_popcount(i)));
        }
    }
    MonomialSpace sp2(2);
    CHECK(evaluate_mask(0, sp2) == std::vector<uint8_t>{1, 1, 1, 1});
    CHECK(evaluate_mask(3, sp2) == std::vector<uint8_t>{1, 0, 0, 0});
}

TEST_CASE("precedes: pinned examples") {
    MonomialSpace sp(3);
    CHECK(precedes(0b011, 0b101, sp));   // x0x1 <= x0x2
    CHECK(precedes(0b001, 0b011, sp));   // x0 <= x0x1
    CHECK(!precedes(0b100, 0b011, sp));  // x2 not<= x0x1
    CHECK(precedes(0, 0b111, sp));       // constant below everything
}

TEST_CASE("precedes: partial-order axioms and divisor-rule equivalence, m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        MonomialSpace sp(m);
        uint32_t top = sp.n;  // masks run over [0, 2^m)
        for (uint32_t f = 0; f < top; ++f) {
            CHECK(precedes(f, f, sp));
            for (uint32_t g = 0; g < top; ++g) {
                bool fg = precedes(f, g, sp);
                CHECK(fg == precedes_ref(f, g, m));
                if (fg && precedes(g, f, sp)) CHECK(f == g);
                if (fg) CHECK(degree_of_mask(f) <= degree_of_mask(g));
                if (!fg) continue;
                for (uint32_t h = 0; h < top; ++h)
                    if (precedes(g, h, sp)) CHECK(precedes(f, h, sp));
            }
        }
    }
}

TEST_CASE("elementary moves generate exactly the covering structure") {
    for (int m = 1; m <= 4; ++m) {
        MonomialSpace sp(m);
        std::vector<uint32_t> scratch;
        for (uint32_t i = 0; i < sp.n; ++i) {
            elementary_preds(i, sp, scratch);
            for (uint32_t p : scratch) {
                CHECK(p != i);
                CHECK(precedes_idx(p, i, sp));
                CHECK(p > i);  // predecessors always have larger channel index
            }
            // adjointness with successors
            std::vector<uint32_t> s2;
            for (uint32_t p : scratch) {
                elementary_succs(p, sp, s2);
                CHECK(std::find(s2.begin(), s2.end(), i) != s2.end());
            }
            // closure under elementary preds reaches the whole down-set
            std::set<uint32_t> reach{i};
            std::vector<uint32_t> stack{i};
            while (!stack.empty()) {
                uint32_t x = stack.back();
                stack.pop_back();
                elementary_preds(x, sp, scratch);
                for (uint32_t p : scratch)
                    if (reach.insert(p).second) stack.push_back(p);
            }
            auto full = transitive_downset(i, sp);
            CHECK(reach == std::set<uint32_t>(full.begin(), full.end()));
        }
    }
}

TEST_CASE("is_decreasing and closure") {
    MonomialSpace sp(2);
    CHECK(is_decreasing({0, 1, 2, 3}, sp).ok);
    CHECK(is_decreasing({}, sp).ok);
    // {x0x1} alone (index 0) is missing its whole down-set
    auto chk = is_decreasing({0}, sp);
    CHECK(!chk.ok);
    CHECK(!chk.violations.empty());
    CHECK(decreasing_closure({0}, sp) == std::vector<uint32_t>{0, 1, 2, 3});
    CHECK(decreasing_closure({3}, sp) == std::vector<uint32_t>{3});

    for (int m = 2; m <= 4; ++m) {
        MonomialSpace spm(m);
        for (uint32_t i = 0; i < spm.n; ++i) {
            auto cl = decreasing_closure({i}, spm);
            CHECK(is_decreasing(cl, spm).ok);
            CHECK(cl == transitive_downset(i, spm));
            CHECK(decreasing_closure(cl, spm) == cl);  // idempotent
        }
    }
}

TEST_CASE("admissible_frontier") {
    MonomialSpace sp(2);
    CHECK(admissible_frontier({}, 2, sp) == std::vector<uint32_t>{3});
    // S = {constant}: only x0 (index 2) is admissible; x1 needs x0 first
    CHECK(admissible_frontier({3}, 2, sp) == std::vector<uint32_t>{2});
    CHECK(admissible_frontier({2, 3}, 2, sp) == std::vector<uint32_t>{1});
    CHECK(admissible_frontier({0, 1, 2, 3}, 2, sp).empty());
    // cap 0 blocks everything above the constant
    CHECK(admissible_frontier({3}, 0, sp).empty());

    MonomialSpace sp4(4);
    std::vector<uint32_t> s{15};
    for (int step = 0; step < 12; ++step) {
        auto fr = admissible_frontier(s, 4, sp4);
        if (fr.empty()) break;
        s.push_back(fr.front());
        std::sort(s.begin(), s.end());
        CHECK(is_decreasing(s, sp4).ok);
    }
}

TEST_CASE("valid_space bounds") {
    CHECK(valid_space(1));
    CHECK(valid_space(kMaxM));
    CHECK(!valid_space(0));
    CHECK(!valid_space(kMaxM + 1));
}
