#include "pf/io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pf/oracle.hpp"
#include "pf/weight_spectrum.hpp"

namespace pf {

using nlohmann::json;

nlohmann::json channel_to_json(const ChannelModel& model) {
    json j;
    if (model.kind == ChannelKind::BEC) {
        j["kind"] = "bec";
        j["eps"] = model.eps;
    } else {
        j["kind"] = "awgn";
        j["ebn0_db"] = model.ebn0_db;
        j["rate"] = model.rate;
    }
    return j;
}

ChannelModel channel_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "bec") return ChannelModel::bec(j.at("eps").get<double>());
    if (kind == "awgn")
        return ChannelModel::awgn(j.at("ebn0_db").get<double>(),
                                  j.value("rate", 0.5));
    throw std::invalid_argument("unknown channel kind: " + kind);
}

static const char* strategy_name(Strategy s) {
    return s == Strategy::Mixed ? "mixed" : "reliability";
}

json design_to_json(const InformationSet& set) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = (uint64_t)1 << set.m;
    j["k"] = set.k;
    j["strategy"] = strategy_name(set.strategy);
    j["channel"] = channel_to_json(set.channel);
    j["alpha"] = set.alpha;
    if (set.strategy == Strategy::Mixed) {
        j["degree_cap"] = set.degree_cap;
        j["f_k"] = set.f_k;
    }
    j["indices"] = set.indices;
    j["metric"] = set.metric;
    j["j_cost"] = set.j_cost;
    return j;
}

InformationSet design_from_json(const json& j) {
    InformationSet set;
    uint64_t n = j.at("n").get<uint64_t>();
    if (n < 2 || (n & (n - 1)) != 0 || n > (1ull << kMaxM))
        throw std::invalid_argument("n must be a power of two in [2, 2^30]");
    set.m = 0;
    while ((1ull << set.m) < n) ++set.m;
    set.k = j.at("k").get<uint32_t>();
    std::string strat = j.at("strategy").get<std::string>();
    if (strat == "mixed")
        set.strategy = Strategy::Mixed;
    else if (strat == "reliability")
        set.strategy = Strategy::Reliability;
    else
        throw std::invalid_argument("unknown strategy: " + strat);
    set.channel = channel_from_json(j.at("channel"));
    set.alpha = j.value("alpha", 100.0);
    set.degree_cap = j.value("degree_cap", -1);
    set.f_k = j.value("f_k", 0.0);
    set.indices = j.at("indices").get<std::vector<uint32_t>>();
    if (set.indices.size() != set.k)
        throw std::invalid_argument("index list size disagrees with k");
    for (uint32_t i : set.indices)
        if (i >= n) throw std::invalid_argument("design index out of range");
    if (j.contains("metric")) set.metric = j["metric"].get<std::vector<double>>();
    if (j.contains("j_cost")) set.j_cost = j["j_cost"].get<std::vector<double>>();
    return set;
}

DesignSpec spec_from_json(const json& j) {
    DesignSpec spec;
    uint64_t n = j.at("n").get<uint64_t>();
    if (n < 2 || (n & (n - 1)) != 0 || n > (1ull << kMaxM))
        throw std::invalid_argument("n must be a power of two in [2, 2^30]");
    spec.m = 0;
    while ((1ull << spec.m) < n) ++spec.m;
    spec.k = j.at("k").get<uint32_t>();
    spec.channel = channel_from_json(j.at("channel"));
    spec.alpha = j.value("alpha", 100.0);
    if (j.contains("degree_cap") && !j["degree_cap"].is_null())
        spec.degree_cap = j["degree_cap"].get<int>();
    std::string strat = j.value("strategy", "reliability");
    if (strat == "mixed")
        spec.strategy = Strategy::Mixed;
    else if (strat == "reliability")
        spec.strategy = Strategy::Reliability;
    else
        throw std::invalid_argument("unknown strategy: " + strat);
    return spec;
}

json analyze_design(const InformationSet& set, const ChannelModel& model) {
    MonomialSpace sp(set.m);
    if (set.k == (uint32_t)sp.n) {
        json j;
        j["warning"] = "rate-1 design: maximum degree m gives wmin = 1";
        j["wmin"] = 1;
        return j;
    }
    bool closed = is_decreasing(set.indices, sp, 1).ok;
    WeightReport rep = awmin_unchecked(set.indices, sp);
    ReliabilityProfile prof = profile_for(model, set.m);
    double lz = std::log(channel_bhattacharyya(model));
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = sp.n;
    j["k"] = set.k;
    j["strategy"] = strategy_name(set.strategy);
    j["channel"] = channel_to_json(model);
    j["decreasing"] = closed;
    j["r"] = rep.r;
    j["wmin"] = rep.wmin;
    j["awmin"] = rep.awmin.str();
    j["sc_sum"] = sc_sum_bound(set.indices, prof);
    j["ub_wmin"] = std::exp(bigint_log(rep.awmin) + (double)rep.wmin * lz);
    json ratios = json::object();
    std::map<int, double> ratio_map;
    for (uint32_t i : set.indices) {
        int d = degree_of_index(i, sp);
        if (!ratio_map.count(d)) {
            double wd = std::ldexp(1.0, set.m - d);
            ratio_map[d] = std::exp((wd - (double)rep.wmin) * lz);
        }
    }
    for (auto& [d, ratio] : ratio_map) ratios[std::to_string(d)] = ratio;
    j["ml_negligibility"] = ratios;
    return j;
}

json compare_to_json(const CompareReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["sym_diff"] = rep.sym_diff;
    j["decreasing_a"] = rep.decreasing_a;
    j["decreasing_b"] = rep.decreasing_b;
    j["sum_a"] = rep.sum_a;
    j["sum_b"] = rep.sum_b;
    j["d_sum"] = rep.d_sum;
    j["wmin_a"] = rep.wmin_a;
    j["wmin_b"] = rep.wmin_b;
    j["awmin_a"] = rep.awmin_a.str();
    j["awmin_b"] = rep.awmin_b.str();
    j["ub_a"] = rep.ub_a;
    j["ub_b"] = rep.ub_b;
    j["d_ub"] = rep.ub_b - rep.ub_a;
    return j;
}

std::string sweep_to_csv(const SweepResult& res, int m) {
    std::ostringstream os;
    os << "rho,param,wmin,jump";
    for (int d = 0; d <= m; ++d) os << ",n_" << (1u << d);
    os << "\n";
    os.precision(12);
    for (const auto& pt : res.points) {
        os << pt.rho << "," << pt.param << "," << pt.wmin << "," << (pt.jump ? 1 : 0);
        for (int d = 0; d <= m; ++d) os << "," << pt.hist_d[d];
        os << "\n";
    }
    return os.str();
}

std::string sim_to_csv(const SimResult& res) {
    std::ostringstream os;
    os << "ebn0_db,blocks,blk_errs,bler,bler_lo,bler_hi,prune,ml_like\n";
    os.precision(12);
    for (const auto& pt : res.points) {
        os << pt.ebn0_db << "," << pt.blocks << "," << pt.block_errors << ","
           << pt.bler << "," << pt.bler_lo << "," << pt.bler_hi << ","
           << pt.prune << "," << pt.ml_like << "\n";
    }
    return os.str();
}

json run_oracle_suite(int exhaustive_max_m, size_t sampled_sets,
                      uint32_t sample_max_k, uint64_t seed) {
    if (exhaustive_max_m < 1 || exhaustive_max_m > 4)
        throw std::domain_error("exhaustive budget must be within [1,4]");
    json failures = json::array();
    uint64_t checks = 0;

    auto check_set = [&](const std::vector<uint32_t>& set, const MonomialSpace& sp) {
        if (set.empty()) return;
        auto hist = enumerate_weights(set, sp);
        uint64_t wmin_enum = 0;
        uint64_t count_enum = 0;
        for (auto& [w, c] : hist) {
            if (w > 0) {
                wmin_enum = w;
                count_enum = c;
                break;
            }
        }
        uint64_t wmin_cf = wmin_of(set, sp);
        WeightReport rep = awmin_of(set, sp);
        ++checks;
        if (wmin_cf != wmin_enum || rep.awmin != bigint(count_enum)) {
            json f;
            f["m"] = sp.m;
            f["set"] = set;
            f["wmin_closed_form"] = wmin_cf;
            f["wmin_enumerated"] = wmin_enum;
            f["awmin_closed_form"] = rep.awmin.str();
            f["awmin_enumerated"] = count_enum;
            failures.push_back(f);
        }
        for (uint32_t i : set) {
            ++checks;
            uint64_t cf = bitwise_wmin(i, set, sp);
            uint64_t en = oracle_bitwise_wmin(set, i, sp);
            if (cf != en) {
                json f;
                f["m"] = sp.m;
                f["set"] = set;
                f["index"] = i;
                f["bitwise_closed_form"] = cf;
                f["bitwise_enumerated"] = en;
                failures.push_back(f);
            }
        }
    };

    for (int m = 1; m <= exhaustive_max_m; ++m) {
        MonomialSpace sp(m);
        for (const auto& set : all_decreasing_sets(sp)) check_set(set, sp);
        for (uint32_t mask = 1; mask < sp.n; ++mask) {
            ++checks;
            uint64_t orbit = oracle_orbit(mask, sp);
            bigint expect = bigint(1) << (degree_of_mask(mask) + lambda_size(mask, sp));
            if (bigint(orbit) != expect) {
                json f;
                f["m"] = m;
                f["varmask"] = mask;
                f["orbit_enumerated"] = orbit;
                f["orbit_formula"] = expect.str();
                failures.push_back(f);
            }
        }
    }
    if (sampled_sets > 0) {
        MonomialSpace sp(5);
        for (const auto& set :
             sample_decreasing_sets(sp, sampled_sets, sample_max_k, seed))
            check_set(set, sp);
    }

    json out;
    out["schema_version"] = kSchemaVersion;
    out["checks"] = checks;
    out["pass"] = failures.empty();
    out["failures"] = failures;
    return out;
}

}  // namespace pf
