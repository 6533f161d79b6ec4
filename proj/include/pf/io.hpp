#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pf/construction.hpp"
#include "pf/simulator.hpp"

namespace pf {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json channel_to_json(const ChannelModel& model);
ChannelModel channel_from_json(const nlohmann::json& j);

nlohmann::json design_to_json(const InformationSet& set);
InformationSet design_from_json(const nlohmann::json& j);

// DesignSpec from request JSON: {n, k, channel{...}, strategy, alpha?, degree_cap?}
DesignSpec spec_from_json(const nlohmann::json& j);

// Table metrics for a design: wmin, awmin, sc_sum, ub_wmin, negligibility.
nlohmann::json analyze_design(const InformationSet& set, const ChannelModel& model);

nlohmann::json compare_to_json(const CompareReport& rep);

std::string sweep_to_csv(const SweepResult& res, int m);
std::string sim_to_csv(const SimResult& res);

// Brute-force validation suite; returns {pass, checks, failures[...]}.
nlohmann::json run_oracle_suite(int exhaustive_max_m, size_t sampled_sets,
                                uint32_t sample_max_k, uint64_t seed);

}  // namespace pf
