#include "pf/construction.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace pf {

ReliabilityProfile profile_for(const ChannelModel& model, int m) {
    if (model.kind == ChannelKind::BEC) return bec_bhattacharyya(m, model.eps);
    return ga_awgn(m, model.ebn0_db, model.rate);
}

static void check_spec(const DesignSpec& spec) {
    if (!valid_space(spec.m)) throw std::domain_error("m outside [1,30]");
    uint32_t n = 1u << spec.m;
    if (spec.k < 1 || spec.k > n) throw std::domain_error("K outside [1,N]");
    if (spec.alpha < 0.0) throw std::domain_error("alpha must be nonnegative");
}

InformationSet construct_reliability(const DesignSpec& spec) {
    check_spec(spec);
    ChannelModel ch = spec.channel;
    if (ch.kind == ChannelKind::BiAWGN) ch.rate = (double)spec.k / (double)(1u << spec.m);
    ReliabilityProfile prof = profile_for(ch, spec.m);
    InformationSet out;
    out.m = spec.m;
    out.k = spec.k;
    out.strategy = Strategy::Reliability;
    out.channel = ch;
    out.alpha = spec.alpha;
    out.indices = select_best(prof, spec.k);
    out.metric.reserve(spec.k);
    for (uint32_t i : out.indices) out.metric.push_back(prof.values[i]);
    out.j_cost = out.metric;
    return out;
}

double mixed_cost(uint32_t i, const ReliabilityProfile& prof,
                  const MonomialSpace& sp, int r, double alpha) {
    double j = prof.values[i];
    uint32_t mask = mask_of_index(i, sp);
    if (degree_of_mask(mask) == r && alpha > 0.0) {
        double lz = std::log(channel_bhattacharyya(prof.channel));
        double wmin = std::ldexp(1.0, sp.m - r);
        double lc = (double)(r + lambda_size(mask, sp)) * M_LN2;
        j += alpha * std::exp(lc + wmin * lz);
    }
    return j;
}

uint64_t max_set_size_for_cap(int m, int r) {
    if (r < 0) return 0;
    if (r >= m) return uint64_t(1) << m;
    uint64_t total = 0, binom = 1;
    for (int t = 0; t <= r; ++t) {
        total += binom;
        binom = binom * (uint64_t)(m - t) / (uint64_t)(t + 1);
    }
    return total;
}

int rm_rstar(int m, uint32_t k) {
    for (int r = 0; r <= m; ++r)
        if (max_set_size_for_cap(m, r) >= k) return r;
    throw std::domain_error("K exceeds blocklength");
}

namespace {

struct GreedyResult {
    std::vector<uint32_t> indices;
    double f_k = 0.0;
    bool feasible = false;
};

GreedyResult greedy_mixed(const ReliabilityProfile& prof, const MonomialSpace& sp,
                          uint32_t k, int cap, double alpha) {
    GreedyResult res;
    if (max_set_size_for_cap(sp.m, cap) < k) return res;
    std::vector<double> jcost(sp.n);
    for (uint32_t i = 0; i < sp.n; ++i) jcost[i] = mixed_cost(i, prof, sp, cap, alpha);

    // (J, index) heap; smaller J first, ties toward the smaller index
    using Item = std::pair<double, uint32_t>;
    auto cmp = [](const Item& a, const Item& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);

    std::vector<uint8_t> in_set(sp.n, 0);
    std::vector<int8_t> missing(sp.n, -1);  // unmet elementary predecessors
    std::vector<uint32_t> scratch;

    uint32_t constant = sp.n - 1;
    missing[constant] = 0;
    heap.emplace(jcost[constant], constant);

    while (res.indices.size() < k) {
        if (heap.empty())
            throw std::runtime_error("frontier exhausted below a feasible cap");
        auto [j, i] = heap.top();
        heap.pop();
        if (in_set[i]) continue;
        in_set[i] = 1;
        res.indices.push_back(i);
        res.f_k += j;
        elementary_succs(i, sp, scratch);
        for (uint32_t s : scratch) {
            if (in_set[s] || degree_of_index(s, sp) > cap) continue;
            if (missing[s] < 0) {
                std::vector<uint32_t> preds;
                elementary_preds(s, sp, preds);
                int cnt = 0;
                for (uint32_t p : preds) cnt += !in_set[p];
                missing[s] = (int8_t)cnt;
            } else {
                --missing[s];
            }
            if (missing[s] == 0) heap.emplace(jcost[s], s);
        }
    }
    std::sort(res.indices.begin(), res.indices.end());
    res.feasible = true;
    return res;
}

}  // namespace

InformationSet construct_mixed(const DesignSpec& spec) {
    check_spec(spec);
    ChannelModel ch = spec.channel;
    if (ch.kind == ChannelKind::BiAWGN) ch.rate = (double)spec.k / (double)(1u << spec.m);
    MonomialSpace sp(spec.m);
    ReliabilityProfile prof = profile_for(ch, spec.m);

    std::vector<int> caps;
    if (spec.degree_cap) {
        if (max_set_size_for_cap(spec.m, *spec.degree_cap) < spec.k)
            throw std::domain_error("degree cap infeasible for this K");
        caps.push_back(*spec.degree_cap);
    } else {
        std::vector<uint32_t> rel = select_best(prof, spec.k);
        int r_rel = 0;
        for (uint32_t i : rel) r_rel = std::max(r_rel, degree_of_index(i, sp));
        caps.push_back(r_rel);
        if (max_set_size_for_cap(spec.m, r_rel - 1) >= spec.k)
            caps.push_back(r_rel - 1);
    }

    GreedyResult best;
    int best_cap = -1;
    for (int cap : caps) {
        GreedyResult g = greedy_mixed(prof, sp, spec.k, cap, spec.alpha);
        if (!g.feasible) continue;
        if (best_cap < 0 || g.f_k < best.f_k) {
            best = std::move(g);
            best_cap = cap;
        }
    }
    if (best_cap < 0) throw std::domain_error("no feasible degree cap");

    InformationSet out;
    out.m = spec.m;
    out.k = spec.k;
    out.strategy = Strategy::Mixed;
    out.channel = ch;
    out.alpha = spec.alpha;
    out.degree_cap = best_cap;
    out.f_k = best.f_k;
    out.indices = std::move(best.indices);
    out.metric.reserve(spec.k);
    out.j_cost.reserve(spec.k);
    for (uint32_t i : out.indices) {
        out.metric.push_back(prof.values[i]);
        out.j_cost.push_back(mixed_cost(i, prof, sp, best_cap, spec.alpha));
    }
    return out;
}

InformationSet construct(const DesignSpec& spec) {
    return spec.strategy == Strategy::Mixed ? construct_mixed(spec)
                                            : construct_reliability(spec);
}

SweepResult staircase_sweep(int m, uint32_t k, ChannelKind family,
                            const std::vector<double>& rho_grid) {
    if (rho_grid.empty()) throw std::domain_error("empty sweep grid");
    if (!std::is_sorted(rho_grid.begin(), rho_grid.end()))
        throw std::domain_error("sweep grid must be ascending");
    MonomialSpace sp(m);
    SweepResult res;
    res.rstar = rm_rstar(m, k);
    res.plateau_wmin = uint64_t(1) << (m - res.rstar);
    uint64_t prev = 0;
    for (double rho : rho_grid) {
        SweepPoint pt;
        pt.rho = rho;
        ChannelModel ch;
        if (family == ChannelKind::BEC) {
            pt.param = std::exp(-rho);
            ch = ChannelModel::bec(pt.param);
        } else {
            pt.param = rho;
            ch = ChannelModel::awgn(rho, (double)k / (double)(1u << m));
        }
        ReliabilityProfile prof = profile_for(ch, m);
        std::vector<uint32_t> set = select_best(prof, k);
        pt.hist_d.assign(m + 1, 0);
        int minpop = m;
        for (uint32_t i : set) {
            int pc = std::popcount(i);
            ++pt.hist_d[pc];
            minpop = std::min(minpop, pc);
        }
        pt.wmin = uint64_t(1) << minpop;  // row weight D_i = 2^popcount(i)
        pt.jump = (prev != 0 && pt.wmin > prev);
        prev = pt.wmin;
        res.points.push_back(std::move(pt));
    }
    return res;
}

CompareReport compare_sets(const InformationSet& a, const InformationSet& b,
                           const ChannelModel& model) {
    if (a.m != b.m || a.k != b.k)
        throw std::invalid_argument("compared designs must share (m, K)");
    MonomialSpace sp(a.m);
    CompareReport rep;
    std::vector<uint32_t> diff;
    std::set_symmetric_difference(a.indices.begin(), a.indices.end(),
                                  b.indices.begin(), b.indices.end(),
                                  std::back_inserter(diff));
    rep.sym_diff = (uint32_t)diff.size();
    ReliabilityProfile prof = profile_for(model, a.m);
    rep.sum_a = sc_sum_bound(a.indices, prof);
    rep.sum_b = sc_sum_bound(b.indices, prof);
    rep.d_sum = rep.sum_b - rep.sum_a;
    rep.decreasing_a = is_decreasing(a.indices, sp, 1).ok;
    rep.decreasing_b = is_decreasing(b.indices, sp, 1).ok;
    WeightReport wa = awmin_unchecked(a.indices, sp);
    WeightReport wb = awmin_unchecked(b.indices, sp);
    rep.wmin_a = wa.wmin;
    rep.wmin_b = wb.wmin;
    rep.awmin_a = wa.awmin;
    rep.awmin_b = wb.awmin;
    double lz = std::log(channel_bhattacharyya(model));
    rep.ub_a = std::exp(bigint_log(wa.awmin) + (double)wa.wmin * lz);
    rep.ub_b = std::exp(bigint_log(wb.awmin) + (double)wb.wmin * lz);
    return rep;
}

}  // namespace pf
