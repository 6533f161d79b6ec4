#pragma once

#include <cstdint>
#include <vector>

#include "pf/codec.hpp"

namespace pf {

// Deterministic counter-based RNG stream (splitmix64 over a seeded counter).
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next_u64();
    double next_unit();           // (0,1)
    double next_gauss();          // standard normal, Box-Muller (one per call)
  private:
    bool have_spare = false;
    double spare = 0.0;
};

uint64_t mix_seed(uint64_t master, uint64_t stream, uint64_t counter);

struct SimConfig {
    std::vector<double> ebn0_grid_db;
    uint64_t max_blocks = 10'000'000;
    uint64_t target_errors = 100;
    uint64_t master_seed = 1;
    uint32_t workers = 1;
    uint64_t batch_size = 256;  // early-stop check granularity
    uint32_t list_size = 1;
    bool exact_llr = false;
    bool noiseless = false;     // smoke mode: LLR = +-300, no noise
};

struct SimPoint {
    double ebn0_db = 0.0;
    uint64_t blocks = 0;
    uint64_t block_errors = 0;
    uint64_t bit_errors = 0;
    uint64_t prune = 0;
    uint64_t ml_like = 0;
    double bler = 0.0;
    double bler_lo = 0.0;  // Wilson 95%
    double bler_hi = 0.0;
    std::vector<uint64_t> first_error_hist;  // SC (L=1) only, length N
};

struct SimResult {
    std::vector<SimPoint> points;
};

// BPSK over AWGN: bit b -> 1-2b, LLR = 2y/sigma^2, noise from block_seed.
std::vector<double> awgn_transmit(const std::vector<uint8_t>& codeword,
                                  double sigma, uint64_t block_seed);

SimResult run_bler(const CodeConfig& cfg, const SimConfig& sim);

void wilson_interval(uint64_t errors, uint64_t trials, double& lo, double& hi);

}  // namespace pf
