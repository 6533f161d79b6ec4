#include "polarforge.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "pf/codec.hpp"
#include "pf/construction.hpp"
#include "pf/io.hpp"
#include "pf/simulator.hpp"

using nlohmann::json;

struct pf_design {
    pf::InformationSet set;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
pf_status guarded(Fn&& fn) {
    g_last_error.clear();
    try {
        return fn();
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return PF_EDATA;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return PF_EINVAL;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PF_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PF_EINTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return PF_EINTERNAL;
    }
}

pf::CodeConfig config_from_params(const json& j, const pf::InformationSet& set) {
    pf::CodeConfig cfg;
    cfg.m = set.m;
    cfg.info_set = set.indices;
    std::string pre = j.value("pretransform", "none");
    if (pre == "crc") {
        cfg.pre = pf::Pretransform::Crc;
        cfg.crc_poly = j.value("crc_poly", 0xC06u);
        cfg.crc_len = j.value("crc_len", 12);
    } else if (pre == "pac") {
        cfg.pre = pf::Pretransform::Pac;
        if (j.contains("pac_p")) cfg.pac_p = j["pac_p"].get<std::vector<uint8_t>>();
    } else if (pre != "none") {
        throw std::invalid_argument("unknown pretransform: " + pre);
    }
    cfg.validate();
    return cfg;
}

}  // namespace

extern "C" {

const char* pf_version(void) { return pf::kToolVersion; }

const char* pf_last_error(void) { return g_last_error.c_str(); }

void pf_string_free(char* s) { delete[] s; }

void pf_design_free(pf_design* d) { delete d; }

pf_status pf_design_build(const char* params_json, pf_design** out) {
    return guarded([&]() -> pf_status {
        if (!params_json || !out) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        pf::DesignSpec spec = pf::spec_from_json(json::parse(params_json));
        auto* d = new pf_design{pf::construct(spec)};
        *out = d;
        return PF_OK;
    });
}

pf_status pf_design_from_json(const char* doc, pf_design** out) {
    return guarded([&]() -> pf_status {
        if (!doc || !out) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        pf::InformationSet set;
        try {
            set = pf::design_from_json(json::parse(doc));
        } catch (const std::invalid_argument& e) {
            g_last_error = e.what();
            return PF_EDATA;  // malformed document, not a parameter error
        }
        *out = new pf_design{std::move(set)};
        return PF_OK;
    });
}

pf_status pf_design_to_json(const pf_design* d, char** out_json) {
    return guarded([&]() -> pf_status {
        if (!d || !out_json) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        *out_json = dup_string(pf::design_to_json(d->set).dump(2));
        return PF_OK;
    });
}

pf_status pf_design_analyze(const pf_design* d, const char* channel_json,
                            char** out_json) {
    return guarded([&]() -> pf_status {
        if (!d || !out_json) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        pf::ChannelModel model = d->set.channel;
        if (channel_json) model = pf::channel_from_json(json::parse(channel_json));
        *out_json = dup_string(pf::analyze_design(d->set, model).dump(2));
        return PF_OK;
    });
}

pf_status pf_design_compare(const pf_design* a, const pf_design* b,
                            const char* channel_json, char** out_json) {
    return guarded([&]() -> pf_status {
        if (!a || !b || !out_json) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        pf::ChannelModel model = a->set.channel;
        if (channel_json) model = pf::channel_from_json(json::parse(channel_json));
        pf::CompareReport rep = pf::compare_sets(a->set, b->set, model);
        *out_json = dup_string(pf::compare_to_json(rep).dump(2));
        return PF_OK;
    });
}

pf_status pf_sweep_run(const char* params_json, char** out_csv) {
    return guarded([&]() -> pf_status {
        if (!params_json || !out_csv) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        json j = json::parse(params_json);
        uint64_t n = j.at("n").get<uint64_t>();
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::domain_error("n must be a power of two");
        int m = 0;
        while ((1ull << m) < n) ++m;
        uint32_t k = j.at("k").get<uint32_t>();
        std::string family = j.value("family", "bec");
        pf::ChannelKind kind;
        if (family == "bec")
            kind = pf::ChannelKind::BEC;
        else if (family == "awgn")
            kind = pf::ChannelKind::BiAWGN;
        else
            throw std::domain_error("unknown channel family: " + family);
        auto grid = j.at("rho_grid").get<std::vector<double>>();
        pf::SweepResult res = pf::staircase_sweep(m, k, kind, grid);
        *out_csv = dup_string(pf::sweep_to_csv(res, m));
        return PF_OK;
    });
}

pf_status pf_simulate_run(const char* params_json, char** out_csv) {
    return guarded([&]() -> pf_status {
        if (!params_json || !out_csv) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        json j = json::parse(params_json);
        pf::InformationSet set;
        if (j.contains("design"))
            set = pf::design_from_json(j["design"]);
        else if (j.contains("design_doc"))
            set = pf::design_from_json(json::parse(j["design_doc"].get<std::string>()));
        else
            throw std::domain_error("simulate needs a design or design_doc field");
        pf::CodeConfig cfg = config_from_params(j, set);

        pf::SimConfig sim;
        sim.ebn0_grid_db = j.at("ebn0_grid_db").get<std::vector<double>>();
        sim.max_blocks = j.value("max_blocks", (uint64_t)10'000'000);
        sim.target_errors = j.value("target_errors", (uint64_t)100);
        sim.master_seed = j.value("seed", (uint64_t)1);
        sim.workers = j.value("workers", 1u);
        sim.batch_size = j.value("batch_size", (uint64_t)256);
        sim.exact_llr = j.value("exact_llr", false);
        sim.noiseless = j.value("noiseless", false);
        std::string decoder = j.value("decoder", "sc");
        if (decoder == "sc")
            sim.list_size = 1;
        else if (decoder == "scl")
            sim.list_size = j.value("list_size", 8u);
        else
            throw std::domain_error("unknown decoder: " + decoder);
        if (sim.list_size < 1) throw std::domain_error("list size must be >= 1");

        pf::SimResult res = pf::run_bler(cfg, sim);
        *out_csv = dup_string(pf::sim_to_csv(res));
        return PF_OK;
    });
}

pf_status pf_oracle_check(const char* params_json, char** out_json) {
    return guarded([&]() -> pf_status {
        if (!out_json) {
            g_last_error = "null argument";
            return PF_EINVAL;
        }
        json j = params_json ? json::parse(params_json) : json::object();
        int max_m = j.value("exhaustive_max_m", 4);
        size_t sampled = j.value("sampled_sets", (size_t)200);
        uint32_t max_k = j.value("sample_max_k", 20u);
        uint64_t seed = j.value("seed", (uint64_t)1);
        *out_json = dup_string(
            pf::run_oracle_suite(max_m, sampled, max_k, seed).dump(2));
        return PF_OK;
    });
}

}  // extern "C"
